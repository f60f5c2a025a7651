"""Bipartite graph schemas.

Vertices are zero-based in Python; the JSON payload uses one-based indices.
"""
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, model_validator


class BipartiteGraph(BaseModel):
    """Bipartite graph with ``left_size`` + ``right_size`` vertices.

    Attributes:
        left_size (int): Number of left vertices m
        right_size (int): Number of right vertices l
        edges (tuple[tuple[int, int], ...]): Zero-based (left, right) pairs in insertion order
    """

    model_config = ConfigDict(frozen=True)

    left_size: int = Field(ge=0, description="Number of left vertices")
    right_size: int = Field(ge=0, description="Number of right vertices")
    edges: tuple[tuple[int, int], ...] = Field(description="Edges as zero-based (left, right) pairs")

    @model_validator(mode="after")
    def _check_edges(self) -> "BipartiteGraph":
        for left, right in self.edges:
            if not (0 <= left < self.left_size and 0 <= right < self.right_size):
                raise ValueError(f"edge {(left, right)} is out of range")
        if len(set(self.edges)) != len(self.edges):
            raise ValueError("duplicate edges")
        return self

    @property
    def vertex_count(self) -> int:
        """Total number of vertices; right vertex j is vertex left_size + j."""
        return self.left_size + self.right_size

    def adjacency(self) -> list[list[int]]:
        """Neighbour lists over the combined vertex numbering."""
        neighbours: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for left, right in self.edges:
            neighbours[left].append(self.left_size + right)
            neighbours[self.left_size + right].append(left)
        return neighbours

    def with_edge(self, edge: tuple[int, int]) -> "BipartiteGraph":
        """A copy with one more edge."""
        return BipartiteGraph(left_size=self.left_size, right_size=self.right_size, edges=(*self.edges, edge))

    def to_payload(self) -> dict[str, Any]:
        """JSON form with one-based indices."""
        return {
            "left": self.left_size,
            "right": self.right_size,
            "edges": [[left + 1, right + 1] for left, right in self.edges],
        }

    @classmethod
    def from_payload(cls, payload: dict[str, Any]) -> "BipartiteGraph":
        """Parse the one-based JSON form."""
        return cls(
            left_size=payload["left"],
            right_size=payload["right"],
            edges=tuple((int(i) - 1, int(j) - 1) for i, j in payload["edges"]),
        )
