"""Projection, width and plank schemas.

Lengths along a direction v are kept as inner-product values; the Euclidean
length of a value difference delta is delta / |v|, so every squared length is
an exact rational delta**2 / <v, v>.
"""
from collections.abc import Sequence

from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.schemas.matrices import canonical_integer_vector
from src.schemas.numbers import BigInt, ExactRational, Sentinel
from src.schemas.points import ValueClass


class Direction(BaseModel):
    """Canonical nonzero integer direction with its cached squared norm.

    Attributes:
        vector (tuple[int, ...]): Primitive vector, first nonzero entry positive
        squared_norm (int): <vector, vector>
    """

    model_config = ConfigDict(frozen=True)

    vector: tuple[BigInt, ...] = Field(description="Canonical direction vector")
    squared_norm: BigInt = Field(description="Squared Euclidean norm")

    @model_validator(mode="after")
    def _check_direction(self) -> "Direction":
        if canonical_integer_vector(self.vector) != self.vector:
            raise ValueError(f"{self.vector} is not canonical")
        if self.squared_norm != sum(v * v for v in self.vector):
            raise ValueError("squared_norm does not match the vector")
        return self

    @classmethod
    def of(cls, vector: Sequence[int]) -> "Direction":
        """Canonicalize a nonzero integer vector into a direction."""
        canonical = canonical_integer_vector(vector)
        return cls(vector=canonical, squared_norm=sum(v * v for v in canonical))

    @property
    def dim(self) -> int:
        """Length of the vector."""
        return len(self.vector)

    def dot(self, point: Sequence[int]) -> int:
        """Inner product with an integer point."""
        return sum(a * b for a, b in zip(self.vector, point, strict=True))


class ProjectionProfile(BaseModel):
    """Distinct inner-product values of a point set along a direction.

    Attributes:
        direction (Direction): The projection direction
        values (tuple[int, ...]): Strictly increasing distinct values
        m (int): Number of distinct values
        membership (tuple[ValueClass, ...]): Point indices per value, in value order
    """

    model_config = ConfigDict(frozen=True)

    direction: Direction
    values: tuple[BigInt, ...]
    m: int
    membership: tuple[ValueClass, ...]

    @model_validator(mode="after")
    def _check_profile(self) -> "ProjectionProfile":
        if self.m != len(self.values):
            raise ValueError("m must equal the number of values")
        if any(a >= b for a, b in zip(self.values, self.values[1:], strict=False)):
            raise ValueError("values must be strictly increasing")
        if tuple(c.value for c in self.membership) != self.values:
            raise ValueError("membership must list the values in order")
        members = [i for c in self.membership for i in c.members]
        if len(set(members)) != len(members):
            raise ValueError("a point belongs to exactly one value")
        return self


class WidthValue(ExactRational):
    """Squared width of a convex hull as an exact rational.

    Attributes:
        certified (bool): False for sampled upper bounds
    """

    certified: bool = True


class GapBoundReport(BaseModel):
    """Check of (max gap)^2 * (m - 1)^2 >= w^2 along one direction.

    Attributes:
        direction (Direction): Projection direction
        m (int): Number of distinct projections
        max_gap (ExactRational | Sentinel): Squared maximal gap, or "infinite" when m = 1
        squared_width (WidthValue): Squared width of the hull
        lhs (ExactRational | None): (max gap)^2 * (m - 1)^2, None when vacuous
        vacuous (bool): m = 1, so there are no gaps
        holds (bool): The inequality holds
    """

    model_config = ConfigDict(frozen=True)

    direction: Direction
    m: int
    max_gap: ExactRational | Sentinel
    squared_width: WidthValue
    lhs: ExactRational | None = None
    vacuous: bool
    holds: bool


class PlankWitness(BaseModel):
    """Widest point-free plank of the sweep construction, with its lower bound.

    Attributes:
        direction (Direction): Common normal of the planks
        body_range (tuple[int, int]): Support values of the body along the direction
        breakpoints (tuple[int, ...]): Sorted hyperplane values of the sweep
        plank (tuple[int, int]): Values bounding the widest plank
        squared_width (ExactRational): Squared width of that plank
        body_squared_width (WidthValue): Squared width w^2 of the body
        k (int): Number of points to avoid
        n (int): Dimension
        branch (str): "k>=n" or "k<n", the piece of the bound applied
        squared_bound (ExactRational): w^2 / (k - n + 2)^2 or w^2 / 4
        holds (bool): squared_width >= squared_bound
        label (str): Always "witness >= bound"; the supremum itself is not computed
    """

    model_config = ConfigDict(frozen=True)

    direction: Direction
    body_range: tuple[BigInt, BigInt]
    breakpoints: tuple[BigInt, ...]
    plank: tuple[BigInt, BigInt]
    squared_width: ExactRational
    body_squared_width: WidthValue
    k: int
    n: int
    branch: str
    squared_bound: ExactRational
    holds: bool
    label: str = "witness >= bound"
