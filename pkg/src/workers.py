"""Order-preserving fan-out over a process pool."""

from collections.abc import Callable, Iterable, Iterator
from concurrent.futures import ProcessPoolExecutor
from typing import TypeVar

T = TypeVar("T")
R = TypeVar("R")


def ordered_map(func: Callable[[T], R], items: Iterable[T], workers: int = 1) -> Iterator[R]:
    """map() across a process pool when workers > 1; results keep the input order.

    `func` and the items must be picklable: module-level functions or partials of them.
    """
    if workers <= 1:
        yield from map(func, items)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        yield from pool.map(func, items, chunksize=8)
