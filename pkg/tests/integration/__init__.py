"""Integration tests.

These build escalation trees through rank 4 and certify the whole catalog; most
are marked ``slow``.
"""
