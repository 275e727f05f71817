"""Unit tests for logging, report paths and the process pool helper."""

import json
import logging
from datetime import datetime

import pytest

from hermitia.config.settings import settings
from hermitia.io.paths import create_output_dir, resolve_output_dir
from hermitia.utils.logging import JSONFormatter, TextFormatter, bind
from hermitia.utils.parallel import parallel_map


def _record(**context) -> logging.LogRecord:
    record = logging.LogRecord("hermitia.test", logging.INFO, __file__, 1, "rank %d done", (3,), None)
    for key, value in context.items():
        setattr(record, key, value)
    return record


def _square(x: int) -> int:
    return x * x


_OFFSET = 0


def _set_offset(offset: int) -> None:
    global _OFFSET
    _OFFSET = offset


def _shifted(x: int) -> int:
    return x + _OFFSET


@pytest.mark.unit
class TestLogging:
    """Tests for the structured formatters and bound context."""

    def test_json_carries_context(self) -> None:
        data = json.loads(JSONFormatter().format(_record(regime="integral", rank=3)))
        assert data["message"] == "rank 3 done"
        assert data["regime"] == "integral"
        assert data["rank"] == 3
        assert data["level"] == "INFO"

    def test_text_appends_context(self) -> None:
        line = TextFormatter().format(_record(label="Qm7:<1,3>"))
        assert line.endswith("hermitia.test: rank 3 done label=Qm7:<1,3>")

    def test_bound_context_merges_with_extra(self) -> None:
        adapter = bind(logging.getLogger("hermitia.test"), regime="classical")
        _, kwargs = adapter.process("msg", {"extra": {"rank": 2}})
        assert kwargs["extra"] == {"regime": "classical", "rank": 2}


@pytest.mark.unit
class TestPaths:
    """Tests for report directories."""

    def test_timestamped(self, isolated_cache) -> None:
        path = create_output_dir("classification", datetime(2024, 1, 2, 3, 4, 5))
        assert path == settings.output_dir / "classification_20240102_030405"
        assert path.is_dir()

    def test_requested_directory(self, tmp_path) -> None:
        target = tmp_path / "run1"
        assert resolve_output_dir("classification", target) == target
        assert target.is_dir()


@pytest.mark.unit
class TestParallelMap:
    """Tests for parallel_map()."""

    def test_inline_preserves_order(self) -> None:
        assert parallel_map(_square, [3, 1, 2], workers=1) == [9, 1, 4]

    def test_pool_preserves_order(self) -> None:
        assert parallel_map(_square, list(range(20)), workers=2) == [x * x for x in range(20)]

    def test_empty(self) -> None:
        assert parallel_map(_square, [], workers=2) == []

    def test_initializer_runs_in_every_worker(self) -> None:
        assert parallel_map(_shifted, [1, 2, 3, 4], workers=2, initializer=_set_offset, initargs=(10,)) == [11, 12, 13, 14]

    def test_initializer_runs_inline(self) -> None:
        assert parallel_map(_shifted, [5], workers=1, initializer=_set_offset, initargs=(-5,)) == [0]
