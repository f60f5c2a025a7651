"""Difference sets and the matrices built from them."""
from collections.abc import Sequence

from loguru import logger

from src.core.errors import UsageError
from src.schemas.graphs import BipartiteGraph
from src.schemas.matrices import IntMatrix
from src.schemas.points import Partition, PointSet
from src.schemas.sensing import DifferenceSet


def difference_set(points: PointSet, partition: Partition, graph: BipartiteGraph) -> DifferenceSet:
    """Select the differences x_i - x_j given by the edges of a bipartite graph.

    Left vertex a of the graph is the point ``partition.left[a]`` and right
    vertex b is ``partition.right[b]``. Column order follows the edge order, so
    a complete graph gives the I-major order.

    Args:
        points (PointSet): The point set S
        partition (Partition): The split S = I + J
        graph (BipartiteGraph): Graph on |I| + |J| vertices

    Returns:
        DifferenceSet: One difference per edge

    Raises:
        UsageError: If the graph does not match the partition sizes or the point count
    """
    if partition.size != points.size:
        raise UsageError(f"partition indexes {partition.size} points but the set has {points.size}")
    if graph.left_size != len(partition.left) or graph.right_size != len(partition.right):
        raise UsageError(
            f"graph sides ({graph.left_size}, {graph.right_size}) do not match "
            f"|I| = {len(partition.left)}, |J| = {len(partition.right)}"
        )
    pairs = tuple((partition.left[a], partition.right[b]) for a, b in graph.edges)
    vectors = tuple(
        tuple(x - y for x, y in zip(points.points[i], points.points[j], strict=True)) for i, j in pairs
    )
    return DifferenceSet(base=points, partition=partition, pairs=pairs, vectors=vectors)


def assemble_matrix(differences: DifferenceSet) -> IntMatrix:
    """The n x |D| matrix A(D) whose column r is the r-th difference."""
    return IntMatrix.from_columns(differences.vectors, rows=differences.base.dim)


def point_column_matrix(points: PointSet) -> IntMatrix:
    """The n x (k - 1) matrix whose columns are the nonzero points.

    Args:
        points (PointSet): Points with the origin listed first

    Returns:
        IntMatrix: Columns x_1 .. x_{k-1} in list order

    Raises:
        UsageError: If the first point is not the origin
    """
    if not points.points or any(points.points[0]):
        raise UsageError("the point-column matrix needs the origin as the first point")
    logger.debug(f"Point-column matrix of {points.size - 1} points")
    return IntMatrix.from_columns(points.points[1:], rows=points.dim)


def support_cardinality(differences: DifferenceSet, subset: Sequence[int] | None = None) -> int:
    """Number c(D') of distinct points appearing in a sub-collection of differences.

    Args:
        differences (DifferenceSet): The difference set D
        subset (Sequence[int] | None): Positions of the differences in D'; None means all of D

    Returns:
        int: The size of the support of D'

    Raises:
        UsageError: If a position is out of range
    """
    positions = range(len(differences.pairs)) if subset is None else subset
    touched: set[int] = set()
    for position in positions:
        if not 0 <= position < len(differences.pairs):
            raise UsageError(f"difference position {position} is out of range")
        touched.update(differences.pairs[position])
    return len(touched)
