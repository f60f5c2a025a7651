"""Exact sparse integer recovery by support enumeration.

If a matrix senses 2s-sparse vectors, two distinct s-sparse vectors never have
the same image, so a bounded s-sparse preimage is unique when it exists.
"""
from collections.abc import Sequence
from fractions import Fraction
from itertools import combinations, product
from math import comb

from loguru import logger

from src.core.errors import AmbiguityError, UsageError, check_budget
from src.core.settings import settings
from src.linalg.exact import affine_solutions
from src.schemas.matrices import IntMatrix


def _bounded_integer(values: Sequence[Fraction], bound: int) -> bool:
    return all(v.denominator == 1 and abs(v) <= bound for v in values)


def _support_solutions(
    matrix: IntMatrix, measurement: tuple[int, ...], support: tuple[int, ...], bound: int, box_budget: int
) -> list[tuple[int, ...]]:
    """Bounded integer solutions of M x = y with x zero outside ``support``."""
    solutions = affine_solutions(matrix.select_columns(support), measurement)
    if solutions is None:
        return []
    free = len(solutions.free_columns)
    # free variables are coordinates of x, so they range over [-bound, bound]
    check_budget(f"free-variable box of support {support}", (2 * bound + 1) ** free, box_budget)
    found = []
    for parameters in product(range(-bound, bound + 1), repeat=free):
        local = solutions.at(parameters)
        if not _bounded_integer(local, bound):
            continue
        x = [0] * matrix.cols
        for column, value in zip(support, local, strict=True):
            x[column] = int(value)
        if matrix.matvec(x) == measurement:
            found.append(tuple(x))
    return found


def recover(
    matrix: IntMatrix,
    measurement: Sequence[int],
    s: int,
    bound: int,
    *,
    budget: int | None = None,
) -> tuple[int, ...] | None:
    """Find the integer vector x with at most ``s`` nonzeros, entries in [-bound, bound] and M x = y.

    Supports are enumerated by size, then lexicographically. Every distinct
    bounded integer solution is collected; the same vector reached through
    several supports counts once.

    Args:
        matrix (IntMatrix): The sensing matrix
        measurement (Sequence[int]): The measurement y, one entry per row
        s (int): Maximum number of nonzeros, at least 0
        bound (int): Maximum absolute entry, at least 1
        budget (int | None): Maximum number of supports; None uses the configured budget

    Returns:
        tuple[int, ...] | None: The unique solution, or None if there is none

    Raises:
        UsageError: If the arguments are malformed
        AmbiguityError: If two distinct solutions exist
        CapacityError: If the supports or a free-variable box exceed their budgets
    """
    measurement = tuple(measurement)
    if len(measurement) != matrix.rows:
        raise UsageError(f"measurement of length {len(measurement)} for a matrix with {matrix.rows} rows")
    if s < 0 or bound < 1:
        raise UsageError(f"recovery needs s >= 0 and bound >= 1, got s={s}, bound={bound}")
    budgets = settings.budget_config
    s = min(s, matrix.cols)
    limit = budgets.resolve(budgets.SUPPORT_BUDGET, budget)
    check_budget("support enumeration", sum(comb(matrix.cols, size) for size in range(s + 1)), limit)
    box_budget = budgets.resolve(budgets.BOX_BUDGET)
    logger.info(f"Recovering a {s}-sparse vector bounded by {bound} from {matrix.rows} measurements")

    first: tuple[int, ...] | None = None
    for size in range(s + 1):
        for support in combinations(range(matrix.cols), size):
            if size == 0:
                candidates = [tuple([0] * matrix.cols)] if not any(measurement) else []
            else:
                candidates = _support_solutions(matrix, measurement, support, bound, box_budget)
            for candidate in candidates:
                if first is None:
                    first = candidate
                    logger.debug(f"Solution {candidate} on support {support}")
                elif candidate != first:
                    raise AmbiguityError(
                        f"measurement {measurement} has two distinct {s}-sparse preimages",
                        first=first,
                        second=candidate,
                    )
    return first
