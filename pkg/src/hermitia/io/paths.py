"""Report directories under ``settings.output_dir``."""

from datetime import datetime
from pathlib import Path
from typing import Optional

from ..config.settings import settings


def create_output_dir(kind: str, timestamp: Optional[datetime] = None) -> Path:
    """Fresh ``<output_dir>/<kind>_YYYYmmdd_HHMMSS``."""
    stamp = (timestamp or datetime.now()).strftime("%Y%m%d_%H%M%S")
    dirpath = settings.output_dir / f"{kind}_{stamp}"
    dirpath.mkdir(parents=True, exist_ok=True)
    return dirpath


def resolve_output_dir(kind: str, requested: Optional[Path] = None) -> Path:
    """The requested directory (created if missing), else a timestamped one."""
    if requested is None:
        return create_output_dir(kind)
    requested.mkdir(parents=True, exist_ok=True)
    return requested
