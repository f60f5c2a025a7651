"""Exact width of convex hulls in dimensions 1 to 3, and hull membership.

The width of a polytope K is the minimum over directions u of the extent
(max <u, x> - min <u, x>) / |u|. The minimum is attained at a facet normal of
the difference body K - K. In the plane those are the edge normals of the hull.
In space each facet of K - K is spanned by two edge directions of K, so the
cross products of pairs of point differences contain every facet normal; the
extra candidates only add values that are never below the width.
"""
import random
from collections.abc import Iterable, Sequence
from fractions import Fraction
from itertools import combinations
from math import comb

from loguru import logger

from src.core.errors import CapacityError, UsageError, check_budget
from src.core.settings import settings
from src.linalg.exact import kernel_rows, rank_of_rows
from src.schemas.matrices import canonical_integer_vector
from src.schemas.planks import WidthValue
from src.schemas.points import PointSet

Vector = tuple[int, ...]


def _dot(u: Sequence[int], x: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(u, x, strict=True))


def _cross(a: Sequence[int], b: Sequence[int]) -> Vector:
    return (a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0])


def _turn(o: Sequence[int], a: Sequence[int], b: Sequence[int]) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def hull2d(points: Iterable[Sequence[int]]) -> list[Vector]:
    """Vertices of the planar convex hull in counter-clockwise order.

    Monotone chain with exact integer orientation tests; collinear points on
    the boundary are dropped.

    Args:
        points (Iterable[Sequence[int]]): Planar integer points

    Returns:
        list[Vector]: Hull vertices, starting at the lexicographically smallest point
    """
    ordered = sorted({tuple(p) for p in points})
    if len(ordered) <= 2:
        return ordered
    lower: list[Vector] = []
    for p in ordered:
        while len(lower) >= 2 and _turn(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[Vector] = []
    for p in reversed(ordered):
        while len(upper) >= 2 and _turn(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def squared_extent(points: Sequence[Sequence[int]], normal: Sequence[int]) -> Fraction:
    """(max <u, x> - min <u, x>)^2 / <u, u> for a nonzero u."""
    values = [_dot(normal, p) for p in points]
    spread = max(values) - min(values)
    return Fraction(spread * spread, _dot(normal, normal))


def affine_rank(points: PointSet) -> int:
    """Dimension of the affine hull of the points (-1 for the empty set)."""
    if not points.points:
        return -1
    return rank_of_rows(points.differences_from_first(), points.dim)


def _differences(points: Sequence[Sequence[int]]) -> list[Vector]:
    return [tuple(a - b for a, b in zip(p, q, strict=True)) for p, q in combinations(points, 2)]


def _pair_normals(differences: Sequence[Vector]) -> set[Vector]:
    limit = settings.budget_config.resolve(settings.budget_config.PAIR_BUDGET)
    check_budget("difference pairs for 3-D normals", comb(len(differences), 2), limit)
    normals = set()
    for a, b in combinations(differences, 2):
        u = _cross(a, b)
        if any(u):
            normals.add(canonical_integer_vector(u))
    return normals


def _width_candidates(points: PointSet) -> set[Vector]:
    """Candidate normals of a full-dimensional set in dimension 1 to 3."""
    if points.dim == 1:
        return {(1,)}
    if points.dim == 2:
        hull = hull2d(points.points)
        normals = set()
        for a, b in zip(hull, hull[1:] + hull[:1], strict=True):
            normals.add(canonical_integer_vector((a[1] - b[1], b[0] - a[0])))
        return normals
    return _pair_normals(_differences(points.points))


def width_with_direction(points: PointSet) -> tuple[Fraction, Vector]:
    """Exact squared width and a canonical direction attaining it.

    For a set that is not full-dimensional the width is 0 and the direction is
    a normal of its affine hull.

    Raises:
        UsageError: If the set is empty
        CapacityError: If the dimension is 4 or more
    """
    if points.size < 1:
        raise UsageError("width needs at least one point")
    if points.dim >= 4:
        raise CapacityError(
            f"exact width is limited to dimension 3, got {points.dim}; use the sampled upper bound",
            required=points.dim,
            budget=3,
        )
    if affine_rank(points) < points.dim:
        normal = kernel_rows(points.differences_from_first(), points.dim)
        return Fraction(0), normal
    best: tuple[Fraction, Vector] | None = None
    for normal in sorted(_width_candidates(points)):
        value = squared_extent(points.points, normal)
        if best is None or value < best[0]:
            best = (value, normal)
    logger.debug(f"Width attained along {best[1]} with squared width {best[0]}")
    return best


def width_exact(points: PointSet) -> WidthValue:
    """Exact squared width of the convex hull of the points.

    Args:
        points (PointSet): At least one point in dimension 1, 2 or 3

    Returns:
        WidthValue: The squared width, 0 when the hull is not full-dimensional

    Raises:
        UsageError: If the set is empty
        CapacityError: If the dimension is 4 or more
    """
    value, _ = width_with_direction(points)
    return WidthValue.of(value)


def width_upper_bound(points: PointSet, *, samples: int | None = None, seed: int | None = None) -> WidthValue:
    """Sampled upper bound on the squared width, for any dimension.

    The extent is evaluated along the coordinate axes and ``samples`` random
    integer directions; the minimum bounds the width from above only, so the
    result is marked as not certified.

    Args:
        points (PointSet): At least one point
        samples (int | None): Number of random directions; None uses the configured value
        seed (int | None): Seed of the direction sampler; None uses the configured value

    Returns:
        WidthValue: The bound, with ``certified`` False
    """
    if points.size < 1:
        raise UsageError("width needs at least one point")
    config = settings.plank_config
    samples = config.WIDTH_SAMPLES if samples is None else samples
    rng = random.Random(config.SAMPLE_SEED if seed is None else seed)
    span = config.SAMPLE_RANGE
    candidates = [tuple(int(i == axis) for i in range(points.dim)) for axis in range(points.dim)]
    for _ in range(samples):
        u = tuple(rng.randint(-span, span) for _ in range(points.dim))
        if any(u):
            candidates.append(u)
    best = min(squared_extent(points.points, u) for u in candidates)
    logger.info(f"Sampled squared width bound {best} from {len(candidates)} directions (not certified)")
    return WidthValue(num=best.numerator, den=best.denominator, certified=False)


def _membership_normals(points: PointSet, rank: int) -> set[Vector]:
    """Normals, inside the affine hull, of every facet of the hull."""
    differences = _differences(points.points)
    if rank == 1:
        return {canonical_integer_vector(next(d for d in differences if any(d)))}
    if points.dim == 2:
        return {canonical_integer_vector((-d[1], d[0])) for d in differences}
    if rank == 3:
        return _pair_normals(differences)
    # a planar set in space: rotate each difference within the plane
    plane = kernel_rows(points.differences_from_first(), 3)
    return {canonical_integer_vector(_cross(plane, d)) for d in differences}


def contains_point(vertices: PointSet, point: Sequence[int]) -> bool:
    """Whether ``point`` lies in the convex hull of ``vertices``.

    The point must lie in the affine hull and, for every candidate facet normal
    u inside it, between min <u, v> and max <u, v>.

    Args:
        vertices (PointSet): At least one point in dimension 1, 2 or 3
        point (Sequence[int]): The query point

    Returns:
        bool: True iff the point is in the closed hull

    Raises:
        UsageError: If the set is empty or the dimensions differ
        CapacityError: If the dimension is 4 or more
    """
    if vertices.size < 1:
        raise UsageError("hull membership needs at least one vertex")
    if len(point) != vertices.dim:
        raise UsageError(f"point of dimension {len(point)} for vertices of dimension {vertices.dim}")
    if vertices.dim >= 4:
        raise CapacityError(
            f"hull membership is limited to dimension 3, got {vertices.dim}", required=vertices.dim, budget=3
        )
    rank = affine_rank(vertices)
    base = vertices.points[0]
    offset = [a - b for a, b in zip(point, base, strict=True)]
    if rank_of_rows([*vertices.differences_from_first(), offset], vertices.dim) > rank:
        return False
    if rank == 0:
        return True
    for normal in _membership_normals(vertices, rank):
        values = [_dot(normal, v) for v in vertices.points]
        if not min(values) <= _dot(normal, point) <= max(values):
            return False
    return True
