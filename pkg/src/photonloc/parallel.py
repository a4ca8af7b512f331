"""Stateless parallel map for embarrassingly parallel sweeps."""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor


def worker_count() -> int:
    """Thread count from PHOTONLOC_THREADS, defaulting to the CPU count."""
    env = os.environ.get("PHOTONLOC_THREADS")
    if env:
        n = int(env)
        if n < 1:
            raise ValueError("PHOTONLOC_THREADS must be positive")
        return n
    return os.cpu_count() or 1


def parallel_map(fn, items):
    """Order-preserving map over items; threaded when more than one worker."""
    items = list(items)
    n = worker_count()
    if n == 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=min(n, len(items))) as pool:
        return list(pool.map(fn, items))
