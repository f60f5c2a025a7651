"""Gap and plank bounds derived from the plank theorem.

Projecting k points onto a line gives m distinct values whose m - 1 gaps span
at least the width w of their hull, so some gap is at least w / (m - 1). The
same sweep with the two support values of a body M added gives a point-free
plank of M of width at least w(M) / (k - n + 2) when k >= n, or w(M) / 2 when
k < n. The proof text phrases the second case as "unless n < k"; the
piecewise rule used here is the one in the statement.

All widths are compared squared, as exact rationals.
"""
from fractions import Fraction

from loguru import logger

from src.core.errors import UsageError
from src.planks.projection import max_gap, min_projection_direction, project
from src.planks.width import contains_point, width_exact, width_with_direction
from src.schemas.numbers import ExactRational
from src.schemas.planks import Direction, GapBoundReport, PlankWitness, WidthValue
from src.schemas.points import PointSet


def check_gap_bound(points: PointSet, direction: Direction) -> GapBoundReport:
    """Check (max gap)^2 * (m - 1)^2 >= w^2 along one direction.

    Args:
        points (PointSet): At least one point in dimension 1, 2 or 3
        direction (Direction): The projection direction

    Returns:
        GapBoundReport: Both sides of the inequality; vacuous when m = 1

    Raises:
        CapacityError: If the width cannot be computed exactly
    """
    profile = project(points, direction)
    width = width_exact(points)
    gap = max_gap(profile)
    if profile.m < 2:
        return GapBoundReport(
            direction=direction, m=profile.m, max_gap=gap, squared_width=width, vacuous=True, holds=True
        )
    lhs = gap.fraction * (profile.m - 1) ** 2
    holds = lhs >= width.fraction
    if not holds:
        logger.warning(f"Gap bound fails along {direction.vector}: {lhs} < {width.fraction}")
    return GapBoundReport(
        direction=direction,
        m=profile.m,
        max_gap=gap,
        squared_width=width,
        lhs=ExactRational.of(lhs),
        vacuous=False,
        holds=holds,
    )


def plank_witness(body: PointSet, points: PointSet, *, budget: int | None = None) -> PlankWitness:
    """Construct a wide plank of the body that avoids the points.

    The direction is the minimum-projection direction of the points (for no
    points, a width-attaining direction of the body). Hyperplanes through the
    body's two support values and through every point split the body into
    point-free planks; the widest one is returned.

    Args:
        body (PointSet): Vertices of the convex body M
        points (PointSet): Points X inside conv(M), same dimension
        budget (int | None): Node budget of the covering search

    Returns:
        PlankWitness: The plank, its squared width and the piecewise lower bound

    Raises:
        UsageError: If the body is empty, the dimensions differ or a point lies outside M
        CapacityError: If a search or the width computation exceeds its limits
    """
    if body.size < 1:
        raise UsageError("the body needs at least one vertex")
    if points.dim != body.dim:
        raise UsageError(f"points of dimension {points.dim} for a body of dimension {body.dim}")
    for point in points.points:
        if not contains_point(body, point):
            raise UsageError(f"point {point} lies outside the body")

    k, n = points.size, body.dim
    body_width, attaining = width_with_direction(body)
    if k == 0:
        direction = Direction.of(attaining)
    else:
        direction, _ = min_projection_direction(points, budget=budget)

    support = [direction.dot(v) for v in body.points]
    low, high = min(support), max(support)
    breakpoints = sorted({low, high, *(direction.dot(p) for p in points.points)})
    if len(breakpoints) == 1:
        plank = (low, high)
    else:
        plank = max(zip(breakpoints, breakpoints[1:], strict=False), key=lambda pair: pair[1] - pair[0])
    spread = plank[1] - plank[0]
    squared = Fraction(spread * spread, direction.squared_norm)

    if k >= n:
        branch, squared_bound = "k>=n", body_width / (k - n + 2) ** 2
    else:
        branch, squared_bound = "k<n", body_width / 4
    holds = squared >= squared_bound
    if holds:
        logger.success(f"Plank of squared width {squared} meets the bound {squared_bound} ({branch})")
    else:
        logger.warning(f"Plank of squared width {squared} misses the bound {squared_bound} ({branch})")
    return PlankWitness(
        direction=direction,
        body_range=(low, high),
        breakpoints=tuple(breakpoints),
        plank=plank,
        squared_width=ExactRational.of(squared),
        body_squared_width=WidthValue.of(body_width),
        k=k,
        n=n,
        branch=branch,
        squared_bound=ExactRational.of(squared_bound),
        holds=holds,
    )
