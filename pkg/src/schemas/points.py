"""Point set schemas.

This module defines integer point sets, the covering certificates that witness
how many parallel hyperplanes cover them, and bipartitions of their indices.
"""
from collections.abc import Sequence

from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.schemas.matrices import IntMatrix, KernelVector
from src.schemas.numbers import BigInt


class PointSet(BaseModel):
    """Ordered list of distinct integer points in dimension ``dim``.

    Attributes:
        dim (int): Ambient dimension n
        points (tuple[tuple[int, ...], ...]): The points, each of length n
    """

    model_config = ConfigDict(frozen=True)

    dim: int = Field(ge=1, description="Ambient dimension")
    points: tuple[tuple[BigInt, ...], ...] = Field(description="The points in order")

    @model_validator(mode="after")
    def _check_points(self) -> "PointSet":
        for point in self.points:
            if len(point) != self.dim:
                raise ValueError(f"point {point} does not have dimension {self.dim}")
        if len(set(self.points)) != len(self.points):
            raise ValueError("points must be pairwise distinct")
        return self

    @classmethod
    def of(cls, points: Sequence[Sequence[int]], dim: int | None = None) -> "PointSet":
        """Build a point set, inferring the dimension from the first point."""
        points = tuple(tuple(p) for p in points)
        if dim is None:
            if not points:
                raise ValueError("the dimension of an empty point set must be given")
            dim = len(points[0])
        return cls(dim=dim, points=points)

    @property
    def size(self) -> int:
        """Number of points k."""
        return len(self.points)

    def translate(self, offset: Sequence[int]) -> "PointSet":
        """Add ``offset`` to every point."""
        shifted = tuple(tuple(a + b for a, b in zip(p, offset, strict=True)) for p in self.points)
        return PointSet(dim=self.dim, points=shifted)

    def transform(self, matrix: IntMatrix) -> "PointSet":
        """Apply an integer linear map to every point (the map must be injective on the set)."""
        return PointSet(dim=matrix.rows, points=tuple(matrix.matvec(p) for p in self.points))

    def reorder(self, order: Sequence[int]) -> "PointSet":
        """The same points listed in ``order``."""
        return PointSet(dim=self.dim, points=tuple(self.points[i] for i in order))

    def differences_from_first(self) -> list[list[int]]:
        """Vectors x_i - x_0 for i >= 1; their rank is the affine dimension of the set."""
        if not self.points:
            return []
        base = self.points[0]
        return [[a - b for a, b in zip(p, base, strict=True)] for p in self.points[1:]]


class ValueClass(BaseModel):
    """Points sharing one inner-product value.

    Attributes:
        value (int): The common inner product with the normal or direction
        members (tuple[int, ...]): Indices of the points with that value
    """

    model_config = ConfigDict(frozen=True)

    value: BigInt = Field(description="Inner-product value")
    members: tuple[int, ...] = Field(description="Point indices with this value")


class CoveringCertificate(BaseModel):
    """Normal vector plus the partition of the points by inner-product value.

    Attributes:
        normal (KernelVector): The common normal of the hyperplanes
        classes (tuple[ValueClass, ...]): One class per hyperplane, sorted by value
        t (int): Number of hyperplanes, i.e. of distinct values
    """

    model_config = ConfigDict(frozen=True)

    normal: KernelVector = Field(description="Normal vector of the parallel hyperplanes")
    classes: tuple[ValueClass, ...] = Field(description="Point indices grouped by inner-product value")
    t: int = Field(ge=0, description="Number of distinct values")

    @model_validator(mode="after")
    def _check_classes(self) -> "CoveringCertificate":
        if self.t != len(self.classes):
            raise ValueError(f"t = {self.t} but there are {len(self.classes)} classes")
        values = [c.value for c in self.classes]
        if len(set(values)) != len(values):
            raise ValueError("class values must be distinct")
        return self

    @classmethod
    def from_normal(cls, points: PointSet, normal: KernelVector) -> "CoveringCertificate":
        """Group the points by their inner product with ``normal``."""
        groups: dict[int, list[int]] = {}
        for index, point in enumerate(points.points):
            groups.setdefault(normal.dot(point), []).append(index)
        classes = tuple(ValueClass(value=v, members=tuple(groups[v])) for v in sorted(groups))
        return cls(normal=normal, classes=classes, t=len(classes))

    @property
    def values(self) -> tuple[int, ...]:
        """The distinct values in increasing order."""
        return tuple(c.value for c in self.classes)

    def validate_against(self, points: PointSet) -> bool:
        """Re-check the certificate against the point set it claims to cover.

        Returns:
            bool: True if every point is in exactly one class and every inner product matches
        """
        if self.normal.dimension != points.dim:
            return False
        seen = sorted(i for c in self.classes for i in c.members)
        if seen != list(range(points.size)):
            return False
        return all(self.normal.dot(points.points[i]) == c.value for c in self.classes for i in c.members)


class Partition(BaseModel):
    """Split of the indices 0..k-1 into the disjoint nonempty lists I and J.

    Attributes:
        left (tuple[int, ...]): The indices of I, in order
        right (tuple[int, ...]): The indices of J, in order
    """

    model_config = ConfigDict(frozen=True)

    left: tuple[int, ...] = Field(description="Indices of I")
    right: tuple[int, ...] = Field(description="Indices of J")

    @model_validator(mode="after")
    def _check_split(self) -> "Partition":
        if not self.left or not self.right:
            raise ValueError("both sides of a partition must be nonempty")
        if set(self.left) & set(self.right):
            raise ValueError("I and J must be disjoint")
        everything = sorted(self.left + self.right)
        if everything != list(range(len(everything))):
            raise ValueError("I and J together must index every point exactly once")
        return self

    @classmethod
    def split_at(cls, size: int, cut: int) -> "Partition":
        """I = the first ``cut`` indices, J = the rest."""
        return cls(left=tuple(range(cut)), right=tuple(range(cut, size)))

    @property
    def size(self) -> int:
        """Number of indexed points k = m + l."""
        return len(self.left) + len(self.right)


class GridBoundReport(BaseModel):
    """Outcome of checking both implications of the integer-cube lemma.

    Attributes:
        k (int): Number of points
        n (int): Dimension
        cube (int): Half side length T of the cube C_n(T)
        covering_number (int): Minimum number of parallel hyperplanes
        certificate (CoveringCertificate): Witness for the covering number
        upper_applies (bool): Covering number equals k - n + 1
        upper_holds (bool): Implication "then k <= 2T + n" holds
        lower_applies (bool): Covering number equals 2T + 1
        lower_holds (bool): Implication "then k >= 2T + n" holds
        passed (bool): Both implications hold
    """

    model_config = ConfigDict(frozen=True)

    k: int
    n: int
    cube: int
    covering_number: int
    certificate: CoveringCertificate
    upper_applies: bool
    upper_holds: bool
    lower_applies: bool
    lower_holds: bool
    passed: bool


class ExtremalSearchReport(BaseModel):
    """Result of searching C_n(T) for subsets that need 2T + 1 parallel hyperplanes.

    Attributes:
        n (int): Dimension
        cube (int): Half side length T
        k (int): Subset size searched
        exhaustive (bool): Whether every subset was examined
        examined (int): Number of subsets examined
        found (PointSet | None): First subset needing 2T + 1 hyperplanes, if any
    """

    model_config = ConfigDict(frozen=True)

    n: int
    cube: int
    k: int
    exhaustive: bool
    examined: int
    found: PointSet | None = None
