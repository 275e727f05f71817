"""Escalation trees of positive definite forms.

Starting from the zero form, every form is extended by a vector whose value is
its truant; classes are merged up to integral equivalence at each rank.  The
classical regime keeps even cross terms only, the integral regime keeps all.
"""
