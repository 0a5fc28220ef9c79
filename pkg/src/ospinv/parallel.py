"""Order-preserving map over a process pool."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor


def default_workers() -> int:
    value = os.environ.get("OSPINV_THREADS", "")
    try:
        return max(1, int(value))
    except ValueError:
        return 1


def pmap(fn, items, workers: int | None = None) -> list:
    """``[fn(x) for x in items]``; results come back in input order for any pool size."""
    items = list(items)
    workers = default_workers() if workers is None else workers
    if workers <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=min(workers, len(items))) as pool:
        return list(pool.map(fn, items))
