"""Computational checks of the sensing-matrix theorems.

Each check evaluates hypotheses and conclusion independently and reports
whether the implication holds; a failed hypothesis makes it hold vacuously.
"""
from collections.abc import Iterator
from itertools import combinations

from loguru import logger

from src.core.errors import CapacityError, UsageError
from src.core.settings import settings
from src.graphs.bipartite import complete_bipartite
from src.graphs.girth import girth, girth_exceeds
from src.pointset.covering import covering_number
from src.schemas.graphs import BipartiteGraph
from src.schemas.points import Partition, PointSet
from src.schemas.sensing import ConverseTheoremReport, ForwardTheoremReport, PointColumnTheoremReport
from src.sensing.difference import assemble_matrix, difference_set, point_column_matrix
from src.sensing.verification import senses


def theorem_matrix1_forward(
    points: PointSet,
    partition: Partition,
    graph: BipartiteGraph,
    ell: int,
    *,
    budget: int | None = None,
    threads: int | None = None,
) -> ForwardTheoremReport:
    """Check "no cover by fewer than k - n + 1 and girth > ell  =>  A(D) senses ell-sparse vectors".

    Args:
        points (PointSet): The point set S
        partition (Partition): The split S = I + J
        graph (BipartiteGraph): Graph selecting the differences
        ell (int): Sparsity level, at least 1
        budget (int | None): Enumeration budget passed to every search
        threads (int | None): Worker cap of the sensing check

    Returns:
        ForwardTheoremReport: Hypotheses, conclusion and the implication

    Raises:
        UsageError: If ell < 1 or the graph does not fit the partition
        CapacityError: If a search exceeds its limits
    """
    if ell < 1:
        raise UsageError(f"ell must be >= 1, got {ell}")
    k, n = points.size, points.dim
    number, _ = covering_number(points, budget=budget)
    covering_hypothesis = number >= k - n + 1
    graph_girth = girth(graph)
    girth_hypothesis = girth_exceeds(graph, ell)
    matrix = assemble_matrix(difference_set(points, partition, graph))
    conclusion = senses(matrix, ell, budget=budget, threads=threads)
    implication = not (covering_hypothesis and girth_hypothesis) or conclusion
    notes = []
    if ell > n - 1:
        notes.append(f"ell = {ell} lies outside the stated range 1 <= ell <= n - 1 = {n - 1}")
    if not implication:
        logger.warning(f"Forward implication fails for k={k}, n={n}, ell={ell}")
    return ForwardTheoremReport(
        k=k,
        n=n,
        ell=ell,
        covering_number=number,
        covering_hypothesis=covering_hypothesis,
        girth=graph_girth,
        girth_hypothesis=girth_hypothesis,
        conclusion=conclusion,
        implication_holds=implication,
        notes=tuple(notes),
    )


def bipartitions(size: int) -> Iterator[Partition]:
    """Unordered bipartitions of range(size), index 0 always in I.

    J runs over the nonempty subsets of 1..size-1 by size, then
    lexicographically, which gives 2**(size - 1) - 1 partitions.
    """
    for count in range(1, size):
        for right in combinations(range(1, size), count):
            left = tuple(i for i in range(size) if i not in right)
            yield Partition(left=left, right=right)


def theorem_matrix1_converse(
    points: PointSet,
    *,
    budget: int | None = None,
    threads: int | None = None,
) -> ConverseTheoremReport:
    """Check "every full difference matrix senses n-sparse vectors  =>  no cover by fewer than k - n + 1".

    Swapping I and J negates every difference, which keeps the sensing
    property, so only unordered bipartitions are enumerated.

    Args:
        points (PointSet): The point set S, 2 <= k <= the configured cap
        budget (int | None): Enumeration budget passed to every search
        threads (int | None): Worker cap of the sensing checks

    Returns:
        ConverseTheoremReport: The first failing partition, or the covering verdict

    Raises:
        UsageError: If there are fewer than two points
        CapacityError: If k exceeds the cap or a search exceeds its limits
    """
    k, n = points.size, points.dim
    cap = settings.budget_config.CONVERSE_MAX_POINTS
    if k > cap:
        raise CapacityError(
            f"converse check enumerates bipartitions of at most {cap} points, got {k}", required=k, budget=cap
        )
    if k < 2:
        raise UsageError("converse check needs at least two points")
    checked = 0
    for partition in bipartitions(k):
        checked += 1
        graph = complete_bipartite(len(partition.left), len(partition.right))
        matrix = assemble_matrix(difference_set(points, partition, graph))
        if not senses(matrix, n, budget=budget, threads=threads):
            logger.info(f"Partition {partition.left} | {partition.right} is not {n}-sparse sensing")
            return ConverseTheoremReport(
                k=k,
                n=n,
                partitions_checked=checked,
                failing_partition=partition,
                hypothesis_holds=False,
                implication_holds=True,
            )
    number, _ = covering_number(points, budget=budget)
    conclusion = number >= k - n + 1
    if not conclusion:
        logger.warning(f"Converse implication fails: covering number {number} < {k - n + 1}")
    return ConverseTheoremReport(
        k=k,
        n=n,
        partitions_checked=checked,
        hypothesis_holds=True,
        covering_number=number,
        conclusion=conclusion,
        implication_holds=conclusion,
    )


def theorem_point_columns(points: PointSet, *, budget: int | None = None) -> PointColumnTheoremReport:
    """Check "no cover by fewer than k - n + 1  =>  the point-column matrix senses n-sparse vectors".

    Args:
        points (PointSet): Points with the origin first
        budget (int | None): Enumeration budget passed to every search

    Returns:
        PointColumnTheoremReport: Hypothesis, conclusion and the implication
    """
    matrix = point_column_matrix(points)
    k, n = points.size, points.dim
    number, _ = covering_number(points, budget=budget)
    hypothesis = number >= k - n + 1
    conclusion = senses(matrix, n, budget=budget)
    return PointColumnTheoremReport(
        k=k,
        n=n,
        covering_number=number,
        hypothesis=hypothesis,
        conclusion=conclusion,
        implication_holds=not hypothesis or conclusion,
    )
