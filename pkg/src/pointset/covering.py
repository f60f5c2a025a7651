"""Parallel hyperplane covering numbers.

A point set S is covered by t parallel hyperplanes with normal v iff
{<v, x> : x in S} has at most t values. Fix a partition of S into at most t
blocks: such a v exists iff the differences between points of the same block
do not span the whole space, and then any nonzero v orthogonal to them works.
The search walks partitions as restricted growth strings and prunes a prefix as
soon as its within-block differences span R^n.
"""
import itertools
import random
from math import comb

from loguru import logger

from src.core.errors import CapacityError, UsageError
from src.core.settings import settings
from src.linalg.exact import IncrementalRowSpace, kernel_rows
from src.pointset.construction import in_cube
from src.pointset.partitions import restricted_growth_search
from src.schemas.matrices import KernelVector
from src.schemas.points import CoveringCertificate, ExtremalSearchReport, GridBoundReport, PointSet


def _check_size(points: PointSet, t: int) -> None:
    budgets = settings.budget_config
    if t == 2 and points.size > budgets.COVER_MAX_POINTS_PAIR:
        raise CapacityError(
            f"covering search with t = 2 is limited to {budgets.COVER_MAX_POINTS_PAIR} points, got {points.size}",
            required=points.size,
            budget=budgets.COVER_MAX_POINTS_PAIR,
        )
    if t >= 3 and points.size > budgets.COVER_MAX_POINTS:
        raise CapacityError(
            f"covering search with t >= 3 is limited to {budgets.COVER_MAX_POINTS} points, got {points.size}",
            required=points.size,
            budget=budgets.COVER_MAX_POINTS,
        )


def coverable_by(points: PointSet, t: int, *, budget: int | None = None) -> CoveringCertificate | None:
    """Find parallel hyperplanes, at most ``t`` of them, covering the points.

    Args:
        points (PointSet): At least one point
        t (int): Number of hyperplanes allowed, at least 1
        budget (int | None): Maximum number of search nodes; None uses the configured budget

    Returns:
        CoveringCertificate | None: Certificate of the first feasible partition in
            restricted-growth-string order, or None if t hyperplanes never suffice

    Raises:
        UsageError: If the set is empty or t < 1
        CapacityError: If the set is too large for t or the search exceeds the budget
    """
    if points.size < 1:
        raise UsageError("covering needs at least one point")
    if t < 1:
        raise UsageError(f"t must be >= 1, got {t}")
    _check_size(points, t)
    limit = settings.budget_config.resolve(settings.budget_config.PARTITION_BUDGET, budget)
    dim = points.dim
    coords = points.points
    visited = 0

    def place(state, item, block, blocks):
        nonlocal visited
        visited += 1
        if visited > limit:
            raise CapacityError(f"covering search exceeded {limit} nodes", required=visited, budget=limit)
        representatives, space = state
        if block == blocks:
            return (*representatives, item), space
        anchor = coords[representatives[block]]
        grown = space.add([a - b for a, b in zip(coords[item], anchor, strict=True)])
        if grown.full:
            return None
        return representatives, grown

    initial = ((), IncrementalRowSpace(dim))
    for string, (_, space) in restricted_growth_search(points.size, t, initial, place):
        normal = kernel_rows(space.rows, dim)
        certificate = CoveringCertificate.from_normal(points, KernelVector(coordinates=normal, dimension=dim))
        logger.debug(f"Partition {string} admits normal {normal} with {certificate.t} values")
        return certificate
    logger.debug(f"No covering by {t} parallel hyperplanes after {visited} search nodes")
    return None


def covering_number(points: PointSet, *, budget: int | None = None) -> tuple[int, CoveringCertificate]:
    """Minimum number of parallel hyperplanes covering the points.

    Args:
        points (PointSet): At least one point
        budget (int | None): Node budget for each search

    Returns:
        tuple[int, CoveringCertificate]: The covering number and its certificate

    Raises:
        CapacityError: If a search exceeds its limits
    """
    bound = max(1, points.size - points.dim + 1)
    logger.info(f"Computing covering number of {points.size} points in dimension {points.dim} (bound {bound})")
    for t in range(1, bound + 1):
        certificate = coverable_by(points, t, budget=budget)
        if certificate is not None:
            return certificate.t, certificate
    raise AssertionError(f"no covering found within the bound max(1, k - n + 1) = {bound}")


def grid_bound_check(points: PointSet, cube: int, *, budget: int | None = None) -> GridBoundReport:
    """Check both implications of the integer-cube lemma for one set.

    (1) covering number == k - n + 1  implies  k <= 2T + n;
    (2) covering number == 2T + 1     implies  k >= 2T + n.

    Args:
        points (PointSet): A subset of C_n(T)
        cube (int): Half side length T
        budget (int | None): Node budget for the covering search

    Returns:
        GridBoundReport: The computed quantities and the verdict

    Raises:
        UsageError: If the points are not in C_n(T)
    """
    if not in_cube(points, cube):
        raise UsageError(f"points are not contained in C_{points.dim}({cube})")
    k, n = points.size, points.dim
    number, certificate = covering_number(points, budget=budget)
    upper_applies = number == k - n + 1
    upper_holds = not upper_applies or k <= 2 * cube + n
    lower_applies = number == 2 * cube + 1
    lower_holds = not lower_applies or k >= 2 * cube + n
    passed = upper_holds and lower_holds
    if not passed:
        logger.warning(f"Integer-cube lemma violated for k = {k}, n = {n}, T = {cube}, covering number {number}")
    return GridBoundReport(
        k=k,
        n=n,
        cube=cube,
        covering_number=number,
        certificate=certificate,
        upper_applies=upper_applies,
        upper_holds=upper_holds,
        lower_applies=lower_applies,
        lower_holds=lower_holds,
        passed=passed,
    )


def search_extremal(
    n: int,
    cube: int,
    k: int | None = None,
    *,
    samples: int = 1000,
    seed: int = 0,
    budget: int | None = None,
) -> ExtremalSearchReport:
    """Look for a k-subset of C_n(T) that no 2T parallel hyperplanes cover.

    The whole cube is covered by 2T + 1 coordinate hyperplanes, so such a subset
    needs exactly 2T + 1. Subsets are examined exhaustively in lexicographic order
    when their count fits the search budget, otherwise ``samples`` subsets are
    drawn with a seeded generator.

    Args:
        n (int): Dimension
        cube (int): Half side length T
        k (int | None): Subset size, default 2T + n
        samples (int): Number of random subsets when exhaustive search is too large
        seed (int): Seed of the sampler
        budget (int | None): Largest subset count searched exhaustively

    Returns:
        ExtremalSearchReport: The first subset found, if any
    """
    if n < 1 or cube < 1:
        raise UsageError("search needs n >= 1 and T >= 1")
    k = 2 * cube + n if k is None else k
    grid = list(itertools.product(range(-cube, cube + 1), repeat=n))
    if not 1 <= k <= len(grid):
        raise UsageError(f"subset size {k} is out of range for a cube of {len(grid)} points")
    limit = settings.budget_config.resolve(settings.budget_config.SEARCH_BUDGET, budget)
    total = comb(len(grid), k)
    exhaustive = total <= limit
    if exhaustive:
        candidates = itertools.combinations(grid, k)
    else:
        logger.info(f"{total} subsets exceed the search budget {limit}; sampling {samples} of them")
        rng = random.Random(seed)
        candidates = (tuple(sorted(rng.sample(grid, k))) for _ in range(samples))
    examined = 0
    for subset in candidates:
        examined += 1
        points = PointSet(dim=n, points=subset)
        if coverable_by(points, 2 * cube) is None:
            logger.success(f"Found a {k}-subset of C_{n}({cube}) needing {2 * cube + 1} parallel hyperplanes")
            return ExtremalSearchReport(n=n, cube=cube, k=k, exhaustive=exhaustive, examined=examined, found=points)
    return ExtremalSearchReport(n=n, cube=cube, k=k, exhaustive=exhaustive, examined=examined)
