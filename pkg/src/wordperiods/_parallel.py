"""Prefix partitioning of word spaces and an order-preserving parallel map."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from itertools import product
from typing import Callable, Iterable, TypeVar

T = TypeVar("T")
R = TypeVar("R")


def prefixes(alphabet_size: int, length: int, first: tuple[int, ...] = ()) -> list[tuple[int, ...]]:
    """All prefixes of total length ``len(first) + length`` extending ``first``."""
    return [first + tail for tail in product(range(alphabet_size), repeat=length)]


def run_partitions(fn: Callable[[T], R], tasks: Iterable[T], workers: int = 1) -> list[R]:
    """Apply ``fn`` to every task; results come back in task order whatever ``workers`` is."""
    tasks = list(tasks)
    if workers < 1:
        raise ValueError(f"workers must be >= 1, got {workers}")
    if workers == 1 or len(tasks) <= 1:
        return [fn(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, tasks))
