"""Deterministic first-success search over an ordered candidate stream.

The branch fan-outs in the solvers all reduce to: apply fn to candidates in
a fixed order, return the first non-None result.  With threads > 1 the
candidates are evaluated in order-preserving chunks, so the result is the
one with the smallest index regardless of thread count or scheduling.  That
property is what makes solver output byte-identical across --threads
settings.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from itertools import islice
from typing import Callable, Iterable, Optional, TypeVar

__all__ = ["first_success"]

T = TypeVar("T")
R = TypeVar("R")


def first_success(
    items: Iterable[T],
    fn: Callable[[T], Optional[R]],
    threads: int = 1,
    chunk: int = 256,
) -> Optional[tuple[int, R]]:
    """(index, result) for the first item where fn is not None, else None."""
    if threads < 1:
        raise ValueError("threads must be positive")
    it = iter(items)
    if threads == 1:
        for i, item in enumerate(it):
            r = fn(item)
            if r is not None:
                return i, r
        return None
    base = 0
    with ThreadPoolExecutor(max_workers=threads) as ex:
        while True:
            batch = list(islice(it, chunk * threads))
            if not batch:
                return None
            # map preserves submission order; a whole chunk may be evaluated
            # past a success, which wastes work but never changes the answer.
            for j, r in enumerate(ex.map(fn, batch)):
                if r is not None:
                    return base + j, r
            base += len(batch)
