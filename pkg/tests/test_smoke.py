"""Smoke test: the package imports and a small form round-trips through the pipeline."""

from hermitia import __version__
from hermitia.core.hermitian import diagonal
from hermitia.core.ring import make_field
from hermitia.forms.reduction import reduce
from hermitia.forms.trace import trace_form
from hermitia.representation.enumerate import truant


def test_version():
    assert __version__


def test_norm_form_of_gaussian_integers():
    form = trace_form(diagonal(make_field(1), [1]))
    reduced, _ = reduce(form)
    assert str(reduced) == "x^2+y^2"
    assert truant(reduced, 50) == 3
