"""Structured logging to stderr.

JSON lines by default; ``HERMITIA_LOG_FORMAT=text`` switches to one plain line per
record. Context fields (lattice label, tree rank, regime) are attached with ``bind``
and appear as top-level JSON keys or trailing ``key=value`` pairs.
"""

import json
import logging
import sys
from typing import Any, Dict, MutableMapping, Tuple

try:
    from ..config.settings import settings  # type: ignore
except Exception:  # pydantic-settings unavailable
    class _FallbackSettings:
        log_format: str = "json"
        log_level: str = "INFO"

    settings = _FallbackSettings()  # type: ignore

_RESERVED = set(vars(logging.LogRecord("", 0, "", 0, "", (), None))) | {"message", "asctime"}


def _context(record: logging.LogRecord) -> Dict[str, Any]:
    return {k: v for k, v in vars(record).items() if k not in _RESERVED}


class JSONFormatter(logging.Formatter):
    """One JSON object per record."""

    def format(self, record: logging.LogRecord) -> str:
        log_data: Dict[str, Any] = {
            "timestamp": self.formatTime(record, self.datefmt),
            "level": record.levelname,
            "logger": record.name,
            "message": record.getMessage(),
        }
        log_data.update(_context(record))
        if record.exc_info:
            log_data["exception"] = self.formatException(record.exc_info)
        return json.dumps(log_data, default=str)


class TextFormatter(logging.Formatter):
    def format(self, record: logging.LogRecord) -> str:
        line = f"{self.formatTime(record, self.datefmt)} {record.levelname:<7} {record.name}: {record.getMessage()}"
        context = _context(record)
        if context:
            line += " " + " ".join(f"{k}={v}" for k, v in context.items())
        if record.exc_info:
            line += "\n" + self.formatException(record.exc_info)
        return line


class ContextAdapter(logging.LoggerAdapter):
    """Merges bound context with per-call ``extra``."""

    def process(self, msg: Any, kwargs: MutableMapping[str, Any]) -> Tuple[Any, MutableMapping[str, Any]]:
        kwargs["extra"] = {**self.extra, **(kwargs.get("extra") or {})}
        return msg, kwargs


def get_logger(name: str) -> logging.Logger:
    logger = logging.getLogger(name)
    if not logger.handlers:
        # stdout carries --json output
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(JSONFormatter() if settings.log_format == "json" else TextFormatter())
        logger.addHandler(handler)
        logger.setLevel(getattr(logging, settings.log_level.upper(), logging.INFO))
        logger.propagate = False
    return logger


def bind(logger: logging.Logger, **context: Any) -> ContextAdapter:
    """Logger that tags every record with ``context``."""
    return ContextAdapter(logger, context)
