from __future__ import annotations

import logging
import os

import numba

log = logging.getLogger(__name__)

ENV_VAR = "SMALLWORLD_THREADS"

# the TBB layer on many systems is too old and only produces a warning
numba.config.THREADING_LAYER_PRIORITY = ["omp", "workqueue", "tbb"]


def resolve_threads(requested: int | None = None) -> int:
    """Pick a worker count: explicit value, then $SMALLWORLD_THREADS, then all cores.

    The result is clamped to the size of numba's thread pool, which is fixed
    at import time (``NUMBA_NUM_THREADS``).
    """
    if requested is None:
        env = os.environ.get(ENV_VAR)
        requested = int(env) if env else (os.cpu_count() or 1)
    if requested < 1:
        raise ValueError("thread count must be >= 1")
    limit = numba.config.NUMBA_NUM_THREADS
    if requested > limit:
        log.info("requested %d threads, numba pool has %d; clamping", requested, limit)
        requested = limit
    return requested


def set_threads(requested: int | None = None) -> int:
    n = resolve_threads(requested)
    numba.set_num_threads(n)
    return n
