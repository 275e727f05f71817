"""Order-preserving process pool helpers for CPU-bound sweeps."""

from concurrent.futures import ProcessPoolExecutor
from typing import Any, Callable, Iterable, List, Optional, Tuple, TypeVar

from ..config.settings import settings
from .logging import get_logger

logger = get_logger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def parallel_map(
    func: Callable[[T], R],
    items: Iterable[T],
    workers: Optional[int] = None,
    chunksize: int = 1,
    initializer: Optional[Callable[..., None]] = None,
    initargs: Tuple[Any, ...] = (),
) -> List[R]:
    """
    Apply ``func`` to every item, preserving input order.

    Args:
        func: Module-level (picklable) callable
        items: Work items
        workers: Process count (default: ``settings.worker_count()``); 1 runs inline
        chunksize: Items handed to a worker at a time
        initializer: Called once per worker process with ``initargs`` (inline: once here)
        initargs: Arguments for ``initializer``

    Returns:
        Results in the order of ``items``
    """
    work = list(items)
    if workers is None:
        workers = settings.worker_count()
    workers = max(1, min(workers, len(work)))
    if workers == 1:
        if initializer is not None:
            initializer(*initargs)
        return [func(item) for item in work]
    logger.debug(f"Dispatching {len(work)} items to {workers} workers")
    with ProcessPoolExecutor(max_workers=workers, initializer=initializer, initargs=initargs) as pool:
        return list(pool.map(func, work, chunksize=max(1, chunksize)))
