"""Set partitions as restricted growth strings.

A restricted growth string a_0 .. a_{k-1} has a_0 = 0 and
a_i <= max(a_0 .. a_{i-1}) + 1; position i belongs to block a_i. Strings are
produced in lexicographic order, so the first hit of any search is reproducible.
"""
from collections.abc import Callable, Iterator
from functools import cache
from typing import TypeVar

S = TypeVar("S")


@cache
def stirling2(size: int, blocks: int) -> int:
    """Number of partitions of ``size`` items into exactly ``blocks`` nonempty blocks."""
    if size == blocks:
        return 1
    if blocks == 0 or blocks > size:
        return 0
    return blocks * stirling2(size - 1, blocks) + stirling2(size - 1, blocks - 1)


def count_partitions(size: int, max_blocks: int) -> int:
    """Number of partitions of ``size`` items into at most ``max_blocks`` blocks."""
    return sum(stirling2(size, b) for b in range(0, max_blocks + 1))


def restricted_growth_search(
    size: int,
    max_blocks: int,
    initial: S,
    step: Callable[[S, int, int, int], S | None],
) -> Iterator[tuple[tuple[int, ...], S]]:
    """Depth-first lexicographic enumeration with pruning.

    Args:
        size (int): Number of items
        max_blocks (int): Largest number of blocks allowed
        initial: State before any item is placed
        step (Callable): ``step(state, item, block, blocks_so_far)`` returns the state after
            placing ``item`` in ``block`` (``block == blocks_so_far`` opens a new one), or
            None to prune every string with this prefix

    Yields:
        tuple: (restricted growth string, final state) for every complete, unpruned string
    """
    if size == 0:
        yield (), initial
        return
    if max_blocks < 1:
        return
    prefix: list[int] = []

    def descend(state: S, item: int, blocks: int) -> Iterator[tuple[tuple[int, ...], S]]:
        if item == size:
            yield tuple(prefix), state
            return
        for block in range(min(blocks + 1, max_blocks)):
            child = step(state, item, block, blocks)
            if child is None:
                continue
            prefix.append(block)
            yield from descend(child, item + 1, max(blocks, block + 1))
            prefix.pop()

    yield from descend(initial, 0, 0)


def restricted_growth_strings(size: int, max_blocks: int) -> Iterator[tuple[int, ...]]:
    """Every partition of ``size`` items into at most ``max_blocks`` blocks, lexicographically."""
    for string, _ in restricted_growth_search(size, max_blocks, None, lambda state, item, block, blocks: True):
        yield string


def blocks_of(string: tuple[int, ...]) -> list[list[int]]:
    """Convert a restricted growth string into its list of blocks."""
    blocks: list[list[int]] = []
    for item, block in enumerate(string):
        if block == len(blocks):
            blocks.append([])
        blocks[block].append(item)
    return blocks
