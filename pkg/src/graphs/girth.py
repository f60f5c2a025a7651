"""Girth and short-cycle checks for bipartite graphs.

The difference set D of a bipartition is the edge set of a bipartite graph
Gamma(D). Every sub-collection D' of at most l differences touches more than
|D'| points exactly when Gamma(D) has no cycle of length <= l.
"""
from collections import deque
from itertools import combinations
from math import comb, inf

from loguru import logger

from src.core.errors import UsageError, check_budget
from src.core.settings import settings
from src.schemas.graphs import BipartiteGraph
from src.schemas.numbers import Sentinel


def girth(graph: BipartiteGraph) -> int | Sentinel:
    """Length of the shortest cycle.

    A breadth-first search runs from every vertex. A non-tree edge (u, w) seen
    from source s closes a closed walk of length dist(u) + dist(w) + 1 through s;
    the minimum over all sources is the girth.

    Args:
        graph (BipartiteGraph): The graph

    Returns:
        int | Sentinel: The girth, or Sentinel.ACYCLIC for a forest
    """
    adjacency = graph.adjacency()
    best = inf
    for source in range(graph.vertex_count):
        depth = {source: 0}
        parent = {source: -1}
        queue = deque([source])
        while queue:
            u = queue.popleft()
            # every cycle found further out is at least this long
            if 2 * depth[u] + 1 >= best:
                break
            for w in adjacency[u]:
                if w not in depth:
                    depth[w] = depth[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, depth[u] + depth[w] + 1)
    if best == inf:
        return Sentinel.ACYCLIC
    return int(best)


def girth_exceeds(graph: BipartiteGraph, ell: int) -> bool:
    """Whether the graph has no cycle of length <= ell."""
    value = girth(graph)
    return value is Sentinel.ACYCLIC or value > ell


def distance_within(adjacency: list[list[int]], source: int, target: int, cutoff: int) -> int | None:
    """Breadth-first distance from source to target if it is at most ``cutoff``."""
    if source == target:
        return 0
    depth = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        if depth[u] >= cutoff:
            continue
        for w in adjacency[u]:
            if w in depth:
                continue
            depth[w] = depth[u] + 1
            if w == target:
                return depth[w]
            queue.append(w)
    return None


def support_check_bruteforce(
    graph: BipartiteGraph,
    ell: int,
    *,
    exact_size: bool = False,
    budget: int | None = None,
) -> bool:
    """Check by enumeration that edge subsets touch more vertices than they have edges.

    With ``exact_size`` only the subsets of exactly ``ell`` edges are examined and
    the test is "more than ell vertices". By default every subset of at most
    ``ell`` edges is examined; that form is equivalent to girth > ell, while the
    exact-size form misses a short cycle whose component has fewer than ``ell``
    edges.

    Args:
        graph (BipartiteGraph): The graph
        ell (int): Subset size, at least 1
        exact_size (bool): Examine only subsets of exactly ``ell`` edges
        budget (int | None): Maximum number of subsets; None uses the configured budget

    Returns:
        bool: True iff every examined subset touches more vertices than it has edges

    Raises:
        UsageError: If ell < 1
        CapacityError: If the number of subsets exceeds the budget
    """
    if ell < 1:
        raise UsageError(f"ell must be >= 1, got {ell}")
    sizes = [ell] if exact_size else list(range(1, ell + 1))
    edges = graph.edges
    required = sum(comb(len(edges), s) for s in sizes)
    limit = settings.budget_config.resolve(settings.budget_config.EDGE_SUBSET_BUDGET, budget)
    check_budget("edge subset enumeration", required, limit)
    offset = graph.left_size
    for size in sizes:
        for subset in combinations(edges, size):
            touched = {left for left, _ in subset} | {offset + right for _, right in subset}
            if len(touched) <= size:
                logger.debug(f"Edges {subset} touch only {len(touched)} vertices")
                return False
    return True
