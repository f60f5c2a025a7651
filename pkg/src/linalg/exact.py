"""Exact integer and rational linear algebra.

Rank and determinant use fraction-free (Bareiss) elimination, so every
intermediate value is an integer and each division is exact. Kernel vectors and
solution sets use Gauss-Jordan elimination over ``fractions.Fraction`` and are
scaled back to primitive integer vectors.
"""
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import lcm

from loguru import logger

from src.core.errors import ContractViolation, UsageError
from src.schemas.matrices import IntMatrix, KernelVector, canonical_integer_vector


def bareiss_echelon(rows: Sequence[Sequence[int]], ncols: int) -> tuple[list[list[int]], list[int], int]:
    """Fraction-free row echelon form.

    The pivot of each step is the first nonzero entry, scanning columns left to
    right and rows top to bottom. After the step with pivots (0, c_0) .. (r, c_r)
    every remaining entry equals a bordered minor of the row-permuted input, so
    the division by the previous pivot is exact.

    Args:
        rows (Sequence[Sequence[int]]): Input rows
        ncols (int): Number of columns, needed for empty inputs

    Returns:
        tuple: (echelon rows, pivot columns, sign of the row permutation)
    """
    work = [list(r) for r in rows]
    nrows = len(work)
    pivots: list[int] = []
    sign = 1
    previous = 1
    rank = 0
    for col in range(ncols):
        if rank == nrows:
            break
        pivot_row = next((r for r in range(rank, nrows) if work[r][col]), None)
        if pivot_row is None:
            continue
        if pivot_row != rank:
            work[rank], work[pivot_row] = work[pivot_row], work[rank]
            sign = -sign
        pivot = work[rank][col]
        for r in range(rank + 1, nrows):
            factor = work[r][col]
            row = work[r]
            top = work[rank]
            for c in range(col + 1, ncols):
                row[c] = (pivot * row[c] - factor * top[c]) // previous
            row[col] = 0
        previous = pivot
        pivots.append(col)
        rank += 1
    return work, pivots, sign


def rank_of_rows(rows: Sequence[Sequence[int]], ncols: int) -> int:
    """Rank over the rationals of the matrix with the given rows."""
    return len(bareiss_echelon(rows, ncols)[1])


def rank_exact(matrix: IntMatrix) -> int:
    """Rank of an integer matrix over the rationals.

    Args:
        matrix (IntMatrix): Any matrix; 0 x n and n x 0 matrices have rank 0

    Returns:
        int: The rank
    """
    return rank_of_rows(matrix.row_lists(), matrix.cols)


def determinant_exact(matrix: IntMatrix) -> int:
    """Exact determinant of a square integer matrix.

    Args:
        matrix (IntMatrix): A square matrix; the 0 x 0 matrix has determinant 1

    Returns:
        int: The determinant

    Raises:
        ContractViolation: If the matrix is not square
    """
    if matrix.rows != matrix.cols:
        raise ContractViolation(f"determinant of a non-square {matrix.rows}x{matrix.cols} matrix")
    size = matrix.rows
    if size == 0:
        return 1
    echelon, pivots, sign = bareiss_echelon(matrix.row_lists(), size)
    if len(pivots) < size:
        return 0
    return sign * echelon[size - 1][size - 1]


def _rref(rows: Sequence[Sequence[int | Fraction]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over the rationals, pivots chosen left to right."""
    work = [[Fraction(v) for v in r] for r in rows]
    pivots: list[int] = []
    rank = 0
    for col in range(ncols):
        pivot_row = next((r for r in range(rank, len(work)) if work[r][col]), None)
        if pivot_row is None:
            continue
        work[rank], work[pivot_row] = work[pivot_row], work[rank]
        pivot = work[rank][col]
        work[rank] = [v / pivot for v in work[rank]]
        for r in range(len(work)):
            if r != rank and work[r][col]:
                factor = work[r][col]
                work[r] = [a - factor * b for a, b in zip(work[r], work[rank], strict=True)]
        pivots.append(col)
        rank += 1
        if rank == len(work):
            break
    return work[:rank], pivots


def _integral(vector: Sequence[Fraction]) -> list[int]:
    """Scale a rational vector by the lcm of its denominators."""
    scale = reduce(lcm, (v.denominator for v in vector), 1)
    return [int(v * scale) for v in vector]


def kernel_rows(rows: Sequence[Sequence[int]], ncols: int) -> tuple[int, ...] | None:
    """Canonical kernel vector of the matrix with the given rows, or None."""
    reduced, pivots = _rref(rows, ncols)
    free = next((c for c in range(ncols) if c not in pivots), None)
    if free is None:
        return None
    vector = [Fraction(0)] * ncols
    vector[free] = Fraction(1)
    for row, pivot in zip(reduced, pivots, strict=True):
        vector[pivot] = -row[free]
    return canonical_integer_vector(_integral(vector))


def kernel_vector(matrix: IntMatrix) -> KernelVector | None:
    """A canonical nonzero integer vector v with M v = 0, if one exists.

    The vector comes from the first free column of the reduced row echelon
    form, so the result is reproducible.

    Args:
        matrix (IntMatrix): Any matrix with at least one column

    Returns:
        KernelVector | None: The kernel vector, or None when the columns are independent
    """
    if matrix.cols == 0:
        return None
    coordinates = kernel_rows(matrix.row_lists(), matrix.cols)
    if coordinates is None:
        return None
    return KernelVector(coordinates=coordinates, dimension=matrix.cols)


def columns_independent(matrix: IntMatrix, cols: Sequence[int]) -> bool:
    """Whether the selected columns are linearly independent over the rationals.

    Args:
        matrix (IntMatrix): The matrix
        cols (Sequence[int]): Zero-based column indices

    Returns:
        bool: True iff the selected columns are independent; False when more columns than rows are selected

    Raises:
        UsageError: If an index is out of range or repeated
    """
    for c in cols:
        if not 0 <= c < matrix.cols:
            raise UsageError(f"column index {c} is out of range for {matrix.cols} columns")
    if len(set(cols)) != len(cols):
        raise UsageError(f"repeated column index in {tuple(cols)}")
    if len(cols) > matrix.rows:
        return False
    # rows of the transpose: one per selected column
    selected = [matrix.column(c) for c in cols]
    return rank_of_rows(selected, matrix.rows) == len(cols)


class IncrementalRowSpace:
    """Row space that grows one vector at a time, for backtracking searches.

    Each stored row is reduced against every row stored before it, so a new
    vector is reduced with one pass in insertion order. ``add`` returns a new
    object and leaves the receiver untouched.
    """

    __slots__ = ("_basis", "_dimension")

    def __init__(self, dimension: int, basis: tuple[tuple[int, tuple[int, ...]], ...] = ()) -> None:
        """Initialize the row space.

        Args:
            dimension (int): Length of the vectors
            basis (tuple): (pivot, row) pairs, already reduced
        """
        self._dimension = dimension
        self._basis = basis

    @property
    def rank(self) -> int:
        """Dimension of the row space."""
        return len(self._basis)

    @property
    def rows(self) -> list[tuple[int, ...]]:
        """The stored reduced rows."""
        return [row for _, row in self._basis]

    @property
    def full(self) -> bool:
        """Whether the row space is the whole space."""
        return len(self._basis) == self._dimension

    def add(self, vector: Sequence[int]) -> "IncrementalRowSpace":
        """The row space spanned by the current rows and ``vector``."""
        reduced = list(vector)
        for pivot, row in self._basis:
            if reduced[pivot]:
                factor = reduced[pivot]
                scale = row[pivot]
                reduced = [scale * a - factor * b for a, b in zip(reduced, row, strict=True)]
        if not any(reduced):
            return self
        canonical = canonical_integer_vector(reduced)
        pivot = next(i for i, v in enumerate(canonical) if v)
        return IncrementalRowSpace(self._dimension, (*self._basis, (pivot, canonical)))


@dataclass(frozen=True)
class AffineSolutions:
    """Solution set x = particular + sum_f t_f * directions[f] of M x = y.

    Attributes:
        particular (tuple[Fraction, ...]): Solution with every free variable at 0
        free_columns (tuple[int, ...]): Indices of the free variables
        directions (tuple[tuple[Fraction, ...], ...]): Kernel basis, one per free variable,
            with 1 at its own free column and 0 at the other free columns
    """

    particular: tuple[Fraction, ...]
    free_columns: tuple[int, ...]
    directions: tuple[tuple[Fraction, ...], ...]

    def at(self, parameters: Sequence[int]) -> tuple[Fraction, ...]:
        """The solution whose free variables take the given values."""
        point = list(self.particular)
        for value, direction in zip(parameters, self.directions, strict=True):
            if value:
                point = [p + value * d for p, d in zip(point, direction, strict=True)]
        return tuple(point)


def affine_solutions(matrix: IntMatrix, rhs: Sequence[int]) -> AffineSolutions | None:
    """Exact rational solution set of M x = rhs.

    Args:
        matrix (IntMatrix): Coefficient matrix
        rhs (Sequence[int]): Right-hand side, one entry per row

    Returns:
        AffineSolutions | None: The solution set, or None if the system is inconsistent

    Raises:
        UsageError: If rhs has the wrong length
    """
    if len(rhs) != matrix.rows:
        raise UsageError(f"right-hand side of length {len(rhs)} for {matrix.rows} rows")
    augmented = [[*matrix.row(r), rhs[r]] for r in range(matrix.rows)]
    reduced, pivots = _rref(augmented, matrix.cols + 1)
    if pivots and pivots[-1] == matrix.cols:
        logger.debug("System is inconsistent")
        return None
    free = tuple(c for c in range(matrix.cols) if c not in pivots)
    particular = [Fraction(0)] * matrix.cols
    for row, pivot in zip(reduced, pivots, strict=True):
        particular[pivot] = row[matrix.cols]
    directions = []
    for f in free:
        direction = [Fraction(0)] * matrix.cols
        direction[f] = Fraction(1)
        for row, pivot in zip(reduced, pivots, strict=True):
            direction[pivot] = -row[f]
        directions.append(tuple(direction))
    return AffineSolutions(particular=tuple(particular), free_columns=free, directions=tuple(directions))
