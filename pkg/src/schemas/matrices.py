"""Integer matrix schemas.

This module defines the dense integer matrix that carries point sets,
difference matrices and sensing matrices, and the canonical kernel vector.
"""
from collections.abc import Iterable, Sequence
from functools import reduce
from math import gcd
from typing import Any

from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    FieldSerializationInfo,
    field_serializer,
    field_validator,
    model_validator,
)

from src.schemas.numbers import BigInt, decode_int, encode_int


def canonical_integer_vector(values: Sequence[int]) -> tuple[int, ...]:
    """Divide a nonzero integer vector by its content and make the first nonzero entry positive.

    Raises:
        ValueError: If every entry is zero
    """
    content = reduce(gcd, values, 0)
    if content == 0:
        raise ValueError("the zero vector has no canonical form")
    first = next(v for v in values if v)
    if first < 0:
        content = -content
    return tuple(v // content for v in values)


class IntMatrix(BaseModel):
    """Dense matrix of arbitrary-precision integers, stored row-major.

    The JSON form nests the entries by row: ``{"rows": R, "cols": C, "entries": [[...], ...]}``.

    Attributes:
        rows (int): Number of rows
        cols (int): Number of columns
        entries (tuple[int, ...]): rows * cols entries in row-major order
    """

    model_config = ConfigDict(frozen=True)

    rows: int = Field(ge=0, description="Number of rows")
    cols: int = Field(ge=0, description="Number of columns")
    entries: tuple[BigInt, ...] = Field(description="Entries in row-major order")

    @field_validator("entries", mode="before")
    @classmethod
    def _flatten_rows(cls, value: Any) -> Any:
        if isinstance(value, list | tuple) and any(isinstance(row, list | tuple) for row in value):
            return tuple(decode_int(v) for row in value for v in row)
        return value

    @model_validator(mode="after")
    def _check_shape(self) -> "IntMatrix":
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(f"{len(self.entries)} entries do not fill a {self.rows}x{self.cols} matrix")
        return self

    @field_serializer("entries")
    def _nest_rows(self, entries: tuple[int, ...], info: FieldSerializationInfo) -> list[list[int | str]]:
        encode = encode_int if info.mode_is_json() else int
        return [[encode(v) for v in entries[r * self.cols : (r + 1) * self.cols]] for r in range(self.rows)]

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]], cols: int | None = None) -> "IntMatrix":
        """Build a matrix from a list of rows.

        Args:
            rows (Iterable[Sequence[int]]): The rows
            cols (int | None): Column count, required when there are no rows

        Returns:
            IntMatrix: The matrix
        """
        rows = [tuple(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ValueError("rows have different lengths")
        return cls(rows=len(rows), cols=cols, entries=tuple(v for r in rows for v in r))

    @classmethod
    def from_columns(cls, columns: Iterable[Sequence[int]], rows: int) -> "IntMatrix":
        """Build a matrix whose columns are the given vectors.

        Args:
            columns (Iterable[Sequence[int]]): The column vectors, each of length ``rows``
            rows (int): Row count, needed when there are no columns

        Returns:
            IntMatrix: The rows x len(columns) matrix
        """
        columns = [tuple(c) for c in columns]
        if any(len(c) != rows for c in columns):
            raise ValueError(f"columns must have length {rows}")
        return cls(rows=rows, cols=len(columns), entries=tuple(c[r] for r in range(rows) for c in columns))

    @classmethod
    def identity(cls, size: int) -> "IntMatrix":
        """The size x size identity matrix."""
        return cls.from_rows([[int(r == c) for c in range(size)] for r in range(size)], cols=size)

    def entry(self, row: int, col: int) -> int:
        """Entry at (row, col), zero-based."""
        return self.entries[row * self.cols + col]

    def row(self, row: int) -> tuple[int, ...]:
        """Row ``row`` as a tuple."""
        return self.entries[row * self.cols : (row + 1) * self.cols]

    def column(self, col: int) -> tuple[int, ...]:
        """Column ``col`` as a tuple."""
        return self.entries[col :: self.cols] if self.cols else ()

    def row_lists(self) -> list[list[int]]:
        """A mutable copy of the rows, for the elimination routines."""
        return [list(self.row(r)) for r in range(self.rows)]

    def columns(self) -> list[tuple[int, ...]]:
        """All columns in order."""
        return [self.column(c) for c in range(self.cols)]

    def transpose(self) -> "IntMatrix":
        """The transposed matrix."""
        return IntMatrix.from_columns([self.row(r) for r in range(self.rows)], rows=self.cols)

    def select_columns(self, cols: Sequence[int]) -> "IntMatrix":
        """The submatrix on the given columns, in the given order."""
        return IntMatrix.from_columns([self.column(c) for c in cols], rows=self.rows)

    def matvec(self, vector: Sequence[int]) -> tuple[int, ...]:
        """The product M @ vector."""
        if len(vector) != self.cols:
            raise ValueError(f"vector of length {len(vector)} does not match {self.cols} columns")
        return tuple(sum(a * x for a, x in zip(self.row(r), vector, strict=True)) for r in range(self.rows))

    def sup_norm(self) -> int:
        """Maximum absolute entry, 0 for an empty matrix."""
        return max((abs(v) for v in self.entries), default=0)

    def to_csv(self) -> str:
        """One row per line, comma separated."""
        return "".join(",".join(str(v) for v in self.row(r)) + "\n" for r in range(self.rows))


class KernelVector(BaseModel):
    """Nonzero primitive integer vector with positive first nonzero coordinate.

    Attributes:
        coordinates (tuple[int, ...]): The coordinates
        dimension (int): Number of coordinates
    """

    model_config = ConfigDict(frozen=True)

    coordinates: tuple[BigInt, ...] = Field(description="Coordinates in canonical form")
    dimension: int = Field(ge=1, description="Number of coordinates")

    @model_validator(mode="after")
    def _check_canonical(self) -> "KernelVector":
        if len(self.coordinates) != self.dimension:
            raise ValueError("dimension does not match the number of coordinates")
        if canonical_integer_vector(self.coordinates) != self.coordinates:
            raise ValueError(f"{self.coordinates} is not primitive with a positive leading entry")
        return self

    @classmethod
    def canonical(cls, values: Sequence[int]) -> "KernelVector":
        """Canonicalize any nonzero integer vector."""
        return cls(coordinates=canonical_integer_vector(values), dimension=len(values))

    @classmethod
    def basis(cls, dimension: int, index: int = 0) -> "KernelVector":
        """The standard basis vector e_index."""
        return cls(coordinates=tuple(int(i == index) for i in range(dimension)), dimension=dimension)

    def dot(self, point: Sequence[int]) -> int:
        """Inner product with an integer point."""
        return sum(a * b for a, b in zip(self.coordinates, point, strict=True))
