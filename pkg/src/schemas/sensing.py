"""Sensing matrix schemas.

This module defines difference sets D(I, J), the sensing verification report
and the reports of the two sensing-matrix theorems.
"""
from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.schemas.numbers import BigInt, Sentinel
from src.schemas.points import Partition, PointSet


class DifferenceSet(BaseModel):
    """Differences x_i - x_j across a bipartition, one per selected pair.

    Attributes:
        base (PointSet): The point set the differences are taken in
        partition (Partition): The split S = I + J
        pairs (tuple[tuple[int, int], ...]): Point-index pairs (i in I, j in J), in column order
        vectors (tuple[tuple[int, ...], ...]): x_i - x_j for each pair
    """

    model_config = ConfigDict(frozen=True)

    base: PointSet = Field(description="Underlying point set")
    partition: Partition = Field(description="Split of the point indices into I and J")
    pairs: tuple[tuple[int, int], ...] = Field(description="(i, j) point-index pairs")
    vectors: tuple[tuple[BigInt, ...], ...] = Field(description="Difference vectors in pair order")

    @model_validator(mode="after")
    def _check_vectors(self) -> "DifferenceSet":
        if len(set(self.pairs)) != len(self.pairs):
            raise ValueError("pairs must be distinct")
        if len(self.vectors) != len(self.pairs):
            raise ValueError("one vector per pair is required")
        left, right = set(self.partition.left), set(self.partition.right)
        points = self.base.points
        for (i, j), vector in zip(self.pairs, self.vectors, strict=True):
            if i not in left or j not in right:
                raise ValueError(f"pair {(i, j)} does not cross the partition")
            if vector != tuple(a - b for a, b in zip(points[i], points[j], strict=True)):
                raise ValueError(f"vector for pair {(i, j)} is not x_i - x_j")
        return self

    @property
    def support(self) -> tuple[int, ...]:
        """Indices of the points appearing in some difference, sorted."""
        return tuple(sorted({i for pair in self.pairs for i in pair}))


class SensingReport(BaseModel):
    """Outcome of an exact l-sparse sensing check.

    Attributes:
        n (int): Number of rows
        d (int): Number of columns
        ell (int): Sparsity level tested
        verified (bool | None): Result of the check, None when it was not run
        witness (tuple[int, ...] | None): First dependent column subset, lexicographically
        sup_norm (int): Maximum absolute entry
        bound (float | None): Corollary comparison value, when applicable
        partition (Partition | None): Partition used by the construction pipeline
        graph_kind (str | None): How the girth graph was produced
        notes (tuple[str, ...]): Flags such as the l <= n - 1 range mismatch
    """

    model_config = ConfigDict(frozen=True)

    n: int
    d: int
    ell: int
    verified: bool | None
    witness: tuple[int, ...] | None = None
    sup_norm: BigInt
    bound: float | None = None
    partition: Partition | None = None
    graph_kind: str | None = None
    notes: tuple[str, ...] = ()

    @model_validator(mode="after")
    def _check_witness(self) -> "SensingReport":
        if self.verified is False and (self.witness is None or len(self.witness) > self.ell):
            raise ValueError("a failed check needs a witness of at most ell columns")
        return self


class CorollaryRow(BaseModel):
    """One row of the Corollary comparison table.

    Attributes:
        n (int): Number of rows of the matrix
        ell (int): Sparsity level
        d (int): Number of columns produced by the pipeline
        bound (float): ((n + 2) / 2) ** (1 + 2 / (3 ell - 2))
        margin (float): d - bound
        ratio (float): d / n
        meets_bound (bool): d >= bound within the relative tolerance
    """

    model_config = ConfigDict(frozen=True)

    n: int
    ell: int
    d: int
    bound: float
    margin: float
    ratio: float
    meets_bound: bool


class ForwardTheoremReport(BaseModel):
    """Check of "no cover by fewer than k - n + 1 and girth > l  =>  A(D) senses l-sparse vectors".

    Attributes:
        k (int): Number of points
        n (int): Dimension
        ell (int): Sparsity level
        covering_number (int): Minimum number of parallel hyperplanes covering S
        covering_hypothesis (bool): covering_number >= k - n + 1
        girth (int | Sentinel): Girth of the difference graph
        girth_hypothesis (bool): girth > ell
        conclusion (bool): A(D) senses ell-sparse vectors
        implication_holds (bool): Hypotheses imply the conclusion
        notes (tuple[str, ...]): Flags such as the l <= n - 1 range mismatch
    """

    model_config = ConfigDict(frozen=True)

    k: int
    n: int
    ell: int
    covering_number: int
    covering_hypothesis: bool
    girth: int | Sentinel
    girth_hypothesis: bool
    conclusion: bool
    implication_holds: bool
    notes: tuple[str, ...] = ()


class ConverseTheoremReport(BaseModel):
    """Check of "every full difference matrix senses n-sparse vectors  =>  no cover by fewer than k - n + 1".

    Attributes:
        k (int): Number of points
        n (int): Dimension
        partitions_checked (int): Bipartitions examined
        failing_partition (Partition | None): First bipartition whose A(D) is not n-sparse sensing
        hypothesis_holds (bool): Every bipartition passed
        covering_number (int | None): Computed only when the hypothesis holds
        conclusion (bool | None): covering_number >= k - n + 1, when computed
        implication_holds (bool): Hypothesis implies conclusion (vacuous when it fails)
    """

    model_config = ConfigDict(frozen=True)

    k: int
    n: int
    partitions_checked: int
    failing_partition: Partition | None = None
    hypothesis_holds: bool
    covering_number: int | None = None
    conclusion: bool | None = None
    implication_holds: bool


class PointColumnTheoremReport(BaseModel):
    """Check of "no cover by fewer than k - n + 1  =>  the point-column matrix senses n-sparse vectors".

    Attributes:
        k (int): Number of points, origin included
        n (int): Dimension
        covering_number (int): Minimum number of parallel hyperplanes
        hypothesis (bool): covering_number >= k - n + 1
        conclusion (bool): Point-column matrix senses n-sparse vectors
        implication_holds (bool): Hypothesis implies conclusion
    """

    model_config = ConfigDict(frozen=True)

    k: int
    n: int
    covering_number: int
    hypothesis: bool
    conclusion: bool
    implication_holds: bool
