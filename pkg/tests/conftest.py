"""Shared fixtures for the hermitia test suite."""

import pytest

from hermitia.config.settings import settings
from hermitia.core.ring import make_field
from hermitia.escalate.models import EscalationOptions, Regime
from hermitia.escalate.tree import build_tree, default_options, load_or_build_tree
from hermitia.forms.polynomial import parse_form


@pytest.fixture
def gaussian():
    """Z[i]."""
    return make_field(1)


@pytest.fixture
def eisenstein():
    """Z[(1 + sqrt(-3)) / 2]."""
    return make_field(3)


@pytest.fixture
def four_squares():
    return parse_form("w^2+x^2+y^2+z^2")


@pytest.fixture(scope="session")
def binary_tree():
    """Integral escalation tree through rank 2 (x^2 and its three escalations)."""
    return build_tree(EscalationOptions(regime=Regime.INTEGRAL, max_rank=2), workers=1)


@pytest.fixture(scope="session")
def integral_tree():
    """Full integral escalation tree through rank 4 (slow; cached on disk)."""
    return load_or_build_tree(default_options(Regime.INTEGRAL))


@pytest.fixture
def isolated_cache(tmp_path, monkeypatch):
    """Point the tree cache and report output at a temporary directory."""
    monkeypatch.setattr(settings, "cache_dir", tmp_path / "cache")
    monkeypatch.setattr(settings, "output_dir", tmp_path / "output")
    return tmp_path
