"""Explicit point sets.

This module builds the sets S_n of n + 2 points with coordinates in {-1, 0, 1}
that no two parallel hyperplanes cover, and tests membership in the integer
cube C_n(T) = {x in Z^n : |x_i| <= T}.
"""
from loguru import logger

from src.core.errors import UsageError
from src.schemas.points import PointSet


def build_sn(n: int) -> PointSet:
    """Build S_n = {0, x_1, ..., x_{n+1}}.

    For 1 <= i <= n, x_i = -e_{n-i+1} + e_{n-i+2} + ... + e_n, and x_{n+1} is the
    all-ones vector. Dropping the last coordinate of the nonzero points of S_n
    gives S_{n-1}.

    Args:
        n (int): Dimension, at least 1

    Returns:
        PointSet: The n + 2 points in the listed order

    Raises:
        UsageError: If n < 1
    """
    if n < 1:
        raise UsageError(f"S_n needs n >= 1, got {n}")
    points = [tuple([0] * n)]
    for i in range(1, n + 1):
        point = [0] * n
        point[n - i] = -1
        for j in range(n - i + 1, n):
            point[j] = 1
        points.append(tuple(point))
    points.append(tuple([1] * n))
    logger.debug(f"Built S_{n} with {len(points)} points")
    return PointSet(dim=n, points=tuple(points))


def in_cube(points: PointSet, cube: int) -> bool:
    """Whether every coordinate of every point has absolute value at most ``cube``.

    Args:
        points (PointSet): The points
        cube (int): Half side length T >= 1

    Returns:
        bool: True iff the points lie in C_n(T)

    Raises:
        UsageError: If T < 1
    """
    if cube < 1:
        raise UsageError(f"cube half side length must be >= 1, got {cube}")
    return all(abs(v) <= cube for point in points.points for v in point)
