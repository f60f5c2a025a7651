"""Ordered first-match evaluation with an optional process pool.

Searches in this package return the first hit in enumeration order. With more
than one worker the candidates are evaluated in batches, each batch mapped over
a process pool; ``Executor.map`` preserves input order, so the first hit of the
earliest batch that has one is the same hit a single-threaded scan returns.
"""
from collections.abc import Callable, Iterable
from concurrent.futures import ProcessPoolExecutor
from itertools import islice
from typing import TypeVar

from loguru import logger

from src.core.settings import settings

T = TypeVar("T")
R = TypeVar("R")


def resolve_threads(threads: int | None) -> int:
    """Return the effective worker count (at least 1)."""
    return max(1, threads if threads is not None else settings.base_config.THREADS)


def ordered_first(
    func: Callable[[T], R | None],
    candidates: Iterable[T],
    *,
    threads: int | None = None,
    chunk_size: int = 256,
) -> R | None:
    """Return ``func(c)`` for the first candidate where it is not None.

    Args:
        func (Callable): Picklable module-level function evaluated on each candidate
        candidates (Iterable): Candidates in enumeration order
        threads (int | None): Worker cap; ``None`` uses ``settings.base_config.THREADS``
        chunk_size (int): Candidates handed to each worker per batch

    Returns:
        The first non-None result, or None if no candidate produces one
    """
    workers = resolve_threads(threads)
    if workers == 1:
        for candidate in candidates:
            result = func(candidate)
            if result is not None:
                return result
        return None

    logger.debug(f"Evaluating candidates on {workers} workers in batches of {chunk_size * workers}")
    iterator = iter(candidates)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        while batch := list(islice(iterator, chunk_size * workers)):
            for result in pool.map(func, batch, chunksize=chunk_size):
                if result is not None:
                    return result
    return None
