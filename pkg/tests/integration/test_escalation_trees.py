"""Integration tests for full escalation trees.

Rank-3 trees take seconds; the rank-4 trees take minutes and are cached on disk
under ``settings.cache_dir`` after the first run.
"""

import pytest

from hermitia.criteria.sets import get_set
from hermitia.escalate.models import EscalationOptions, Regime
from hermitia.escalate.tree import build_tree, default_options, load_or_build_tree
from hermitia.forms.polynomial import parse_form
from hermitia.representation.enumerate import truant


@pytest.mark.integration
def test_classical_rank_three():
    tree = build_tree(EscalationOptions(regime=Regime.CLASSICAL, max_rank=3))
    assert tree.counts() == {0: 1, 1: 1, 2: 2, 3: 9}
    assert set(tree.truants(3)) <= set(get_set("S15").values)
    assert tree.diagnostics == []


@pytest.mark.integration
def test_integral_rank_three():
    tree = build_tree(EscalationOptions(regime=Regime.INTEGRAL, max_rank=3))
    assert tree.counts()[3] == 34
    assert set(tree.truants(3)) <= set(get_set("S290").values)
    for node in tree.level(3):
        assert node.form.is_positive_definite
        parent = tree.node(node.parent)
        assert node.form.value(node.witness) == parent.truant


@pytest.mark.integration
def test_sums_of_three_squares_is_an_escalator():
    tree = build_tree(EscalationOptions(regime=Regime.INTEGRAL, max_rank=3))
    keys = [n.key for n in tree.level(3) if n.form == parse_form("x^2+y^2+z^2")]
    assert len(keys) == 1
    assert tree.node(keys[0]).truant == 7


@pytest.mark.integration
@pytest.mark.slow
def test_classical_rank_four():
    tree = load_or_build_tree(default_options(Regime.CLASSICAL))
    assert tree.counts()[4] == 207
    assert tree.diagnostics == []


@pytest.mark.integration
@pytest.mark.slow
def test_integral_rank_four(integral_tree):
    assert integral_tree.counts() == {0: 1, 1: 1, 2: 3, 3: 34, 4: 6560}
    assert set(integral_tree.truants(4)) <= set(get_set("S290").values)


@pytest.mark.integration
@pytest.mark.slow
def test_truant_290_appears(integral_tree):
    """Some quaternary escalator misses 290 itself."""
    assert 290 in integral_tree.truants(4)
    node = next(n for n in integral_tree.level(4) if n.truant == 290)
    assert truant(node.form, 290) == 290
