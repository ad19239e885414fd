"""Order-preserving parallel map used by the enumeration suites."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, TypeVar

T = TypeVar("T")
R = TypeVar("R")

ENV_VAR = "LGR_EXC_JOBS"


def default_jobs() -> int:
    raw = os.environ.get(ENV_VAR, "1")
    try:
        jobs = int(raw)
    except ValueError:
        raise ValueError(f"{ENV_VAR} must be an integer, got {raw!r}") from None
    return max(jobs, 1)


def pmap(fn: Callable[[T], R], items: Iterable[T], jobs: int | None = None) -> list[R]:
    """``[fn(x) for x in items]``, optionally spread over worker processes.

    Results come back in input order, so callers see the same list whatever
    the job count.  ``fn`` must be a picklable top-level function.
    """
    items = list(items)
    jobs = default_jobs() if jobs is None else max(jobs, 1)
    if jobs == 1 or len(items) < 2:
        return [fn(x) for x in items]
    chunk = max(1, len(items) // (4 * jobs))
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=chunk))
