"""Unit tests for the escalation tree cache."""

import pytest

from hermitia.config.settings import settings
from hermitia.escalate.models import EscalationOptions, Regime
from hermitia.escalate.tree import load_or_build_tree
from hermitia.io.cache import TreeCache


@pytest.mark.unit
class TestTreeCache:
    """Tests for TreeCache."""

    def test_round_trip(self, tmp_path, binary_tree) -> None:
        with TreeCache(tmp_path) as cache:
            tree_id = cache.put_tree(binary_tree)
            loaded = cache.get_tree(binary_tree.options)
        assert loaded == binary_tree
        assert len(tree_id) == 16

    def test_missing(self, tmp_path) -> None:
        with TreeCache(tmp_path) as cache:
            assert cache.get_tree(EscalationOptions(max_rank=1)) is None

    def test_list_and_clear(self, tmp_path, binary_tree) -> None:
        with TreeCache(tmp_path) as cache:
            cache.put_tree(binary_tree)
            cache.put_tree(binary_tree)
            listed = cache.list_trees()
            assert len(listed) == 1
            assert listed[0]["node_count"] == 5
            assert listed[0]["regime"] == "integral"
            cache.clear()
            assert cache.list_trees() == []

    def test_options_distinguish_entries(self, tmp_path, binary_tree) -> None:
        with TreeCache(tmp_path) as cache:
            cache.put_tree(binary_tree)
            other = binary_tree.options.model_copy(update={"theta_bound": 20})
            assert cache.get_tree(other) is None


@pytest.mark.unit
class TestLoadOrBuild:
    """Tests for load_or_build_tree()."""

    def test_builds_then_caches(self, isolated_cache) -> None:
        options = EscalationOptions(regime=Regime.CLASSICAL, max_rank=1, truant_cap=57)
        tree = load_or_build_tree(options, use_cache=True, workers=1)
        assert tree.counts() == {0: 1, 1: 1}
        assert load_or_build_tree(options) is tree
        with TreeCache(settings.cache_dir) as cache:
            assert cache.get_tree(options) == tree
