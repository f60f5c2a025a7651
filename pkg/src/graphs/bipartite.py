"""Bipartite graph construction.

Complete bipartite graphs have no cycle shorter than 4, so they already serve
l <= 3. For l >= 4 the greedy generator scans candidate edges in a fixed order
and keeps an edge unless it closes a cycle of length <= l.
"""
from collections.abc import Sequence
from enum import Enum

import networkx as nx
from loguru import logger

from src.core.errors import UsageError
from src.graphs.girth import distance_within
from src.schemas.graphs import BipartiteGraph


class EdgeOrder(str, Enum):
    """Named candidate orders for the greedy generator."""

    LEFT_MAJOR = "left-major"
    RIGHT_MAJOR = "right-major"


def edge_order(m: int, l: int, order: EdgeOrder | str = EdgeOrder.LEFT_MAJOR) -> list[tuple[int, int]]:  # noqa: E741
    """All m * l zero-based (left, right) pairs in a named order.

    Args:
        m (int): Number of left vertices
        l (int): Number of right vertices
        order (EdgeOrder | str): ``left-major`` (by left vertex, then right) or ``right-major``

    Returns:
        list[tuple[int, int]]: The candidate edges
    """
    order = EdgeOrder(order)
    if order is EdgeOrder.LEFT_MAJOR:
        return [(i, j) for i in range(m) for j in range(l)]
    return [(i, j) for j in range(l) for i in range(m)]


def complete_bipartite(m: int, l: int) -> BipartiteGraph:  # noqa: E741
    """The complete bipartite graph K_{m,l} with edges in left-major order.

    Raises:
        UsageError: If m < 1 or l < 1
    """
    if m < 1 or l < 1:
        raise UsageError(f"complete bipartite graph needs m, l >= 1, got ({m}, {l})")
    return BipartiteGraph(left_size=m, right_size=l, edges=tuple(edge_order(m, l)))


def greedy_girth_graph(
    m: int,
    l: int,  # noqa: E741
    ell: int,
    order: EdgeOrder | str | Sequence[tuple[int, int]] = EdgeOrder.LEFT_MAJOR,
) -> BipartiteGraph:
    """Maximal bipartite graph without cycles of length <= ell, built greedily.

    A candidate edge (i, j) closes a cycle of length dist(i, j) + 1, so it is
    kept iff i and j are more than ell - 1 apart in the graph built so far. The
    graph only grows, so every rejected edge stays rejected and the result is
    maximal.

    Args:
        m (int): Number of left vertices
        l (int): Number of right vertices
        ell (int): Forbidden cycle length bound, at least 1
        order: A named order or an explicit sequence of zero-based candidate edges

    Returns:
        BipartiteGraph: The generated graph, edges in acceptance order

    Raises:
        UsageError: If a size is out of range or an explicit candidate is invalid
    """
    if m < 1 or l < 1 or ell < 1:
        raise UsageError(f"greedy generation needs m, l, ell >= 1, got ({m}, {l}, {ell})")
    if isinstance(order, str | EdgeOrder):
        candidates = edge_order(m, l, order)
    else:
        candidates = [tuple(edge) for edge in order]
        for i, j in candidates:
            if not (0 <= i < m and 0 <= j < l):
                raise UsageError(f"candidate edge {(i, j)} is out of range")

    adjacency: list[list[int]] = [[] for _ in range(m + l)]
    edges: list[tuple[int, int]] = []
    present: set[tuple[int, int]] = set()
    for i, j in candidates:
        if (i, j) in present:
            continue
        if distance_within(adjacency, i, m + j, ell - 1) is not None:
            continue
        adjacency[i].append(m + j)
        adjacency[m + j].append(i)
        edges.append((i, j))
        present.add((i, j))
    logger.debug(f"Greedy generation kept {len(edges)} of {m * l} edges for m={m}, l={l}, ell={ell}")
    return BipartiteGraph(left_size=m, right_size=l, edges=tuple(edges))


def edge_bound(k: int, ell: int) -> float:
    """Comparison value (k / 2) ** (1 + 2 / (3 ell - 2)) for the number of edges.

    Only reported next to actual edge counts; nothing asserts that a generated
    graph reaches it.

    Raises:
        UsageError: If k < 2 or ell < 1
    """
    if k < 2 or ell < 1:
        raise UsageError(f"edge bound needs k >= 2 and ell >= 1, got ({k}, {ell})")
    return (k / 2) ** (1 + 2 / (3 * ell - 2))


def to_networkx(graph: BipartiteGraph) -> nx.Graph:
    """Export as a networkx graph with nodes ("L", i) and ("R", j).

    Nodes carry the ``bipartite`` attribute (0 for left, 1 for right) used by
    ``networkx.algorithms.bipartite``.
    """
    exported = nx.Graph()
    exported.add_nodes_from((("L", i) for i in range(graph.left_size)), bipartite=0)
    exported.add_nodes_from((("R", j) for j in range(graph.right_size)), bipartite=1)
    exported.add_edges_from((("L", i), ("R", j)) for i, j in graph.edges)
    return exported
