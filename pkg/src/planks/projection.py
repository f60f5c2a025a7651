"""Projection profiles of point sets along integer directions."""
from fractions import Fraction

from src.core.errors import UsageError
from src.pointset.covering import covering_number
from src.schemas.numbers import ExactRational, Sentinel
from src.schemas.planks import Direction, ProjectionProfile
from src.schemas.points import PointSet, ValueClass


def project(points: PointSet, direction: Direction) -> ProjectionProfile:
    """Distinct inner products <v, x> with the points grouped by value.

    Args:
        points (PointSet): The point set
        direction (Direction): The direction v

    Returns:
        ProjectionProfile: Sorted distinct values and their members

    Raises:
        UsageError: If the dimensions differ
    """
    if direction.dim != points.dim:
        raise UsageError(f"direction of dimension {direction.dim} for points of dimension {points.dim}")
    groups: dict[int, list[int]] = {}
    for index, point in enumerate(points.points):
        groups.setdefault(direction.dot(point), []).append(index)
    values = tuple(sorted(groups))
    membership = tuple(ValueClass(value=v, members=tuple(groups[v])) for v in values)
    return ProjectionProfile(direction=direction, values=values, m=len(values), membership=membership)


def max_gap(profile: ProjectionProfile) -> ExactRational | Sentinel:
    """Squared length of the largest gap between consecutive projections.

    Returns:
        ExactRational | Sentinel: max (delta value)^2 / <v, v>, or INFINITE when there is no pair
    """
    if profile.m < 2:
        return Sentinel.INFINITE
    widest = max(b - a for a, b in zip(profile.values, profile.values[1:], strict=False))
    return ExactRational.of(Fraction(widest * widest, profile.direction.squared_norm))


def min_projection_direction(points: PointSet, *, budget: int | None = None) -> tuple[Direction, int]:
    """Direction with the fewest distinct projections.

    The normal of a minimum covering certificate projects the points onto
    exactly covering-number values, and no direction does better.

    Args:
        points (PointSet): At least one point
        budget (int | None): Node budget of the covering search

    Returns:
        tuple[Direction, int]: The direction and its number m of distinct values
    """
    number, certificate = covering_number(points, budget=budget)
    bound = max(1, points.size - points.dim + 1)
    if number > bound:
        raise AssertionError(f"m = {number} exceeds max(1, k - n + 1) = {bound}")
    return Direction.of(certificate.normal.coordinates), number
