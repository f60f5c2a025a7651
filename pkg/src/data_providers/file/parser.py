"""Turn decoded JSON into domain artifacts.

A file may hold the bare artifact or a whole command report whose ``outputs``
embed it, so the standard output of one command can be fed to another.
"""
from typing import Any

from loguru import logger
from pydantic import ValidationError

from src.core.errors import UsageError
from src.data_providers.file.decoder import JSONDecoder
from src.data_providers.file.reader import FileReader
from src.schemas.graphs import BipartiteGraph
from src.schemas.matrices import IntMatrix
from src.schemas.points import PointSet


class ArtifactParser:
    """Parse point sets, matrices and graphs from JSON files."""

    def __init__(self, file_reader: FileReader, decoder: JSONDecoder | None = None):
        self._file_reader = file_reader
        self._decoder = decoder or JSONDecoder()
        logger.debug(f"ArtifactParser initialized for {file_reader.file_path}")

    def _payload(self, key: str) -> Any:
        payload = self._decoder.decode(self._file_reader.read_all())
        if isinstance(payload, dict) and "command" in payload and "outputs" in payload:
            outputs = payload["outputs"]
            if key not in outputs:
                raise UsageError(f"report in {self._file_reader.file_path} has no '{key}' output")
            logger.debug(f"Unwrapped '{key}' from a '{payload['command']}' report")
            return outputs[key]
        return payload

    def parse_point_set(self) -> PointSet:
        """A point set: ``{"dim": n, "points": [...]}`` or a bare list of points.

        Raises:
            UsageError: If the payload is not a valid point set
        """
        payload = self._payload("point_set")
        try:
            if isinstance(payload, list):
                return PointSet.of(payload)
            return PointSet.model_validate(payload)
        except (ValidationError, ValueError, TypeError) as e:
            raise UsageError(f"invalid point set in {self._file_reader.file_path}: {e}") from e

    def parse_matrix(self) -> IntMatrix:
        """A matrix: ``{"rows": R, "cols": C, "entries": [[...]]}`` or a bare list of rows.

        Raises:
            UsageError: If the payload is not a valid matrix
        """
        payload = self._payload("matrix")
        try:
            if isinstance(payload, list):
                return IntMatrix.from_rows(payload)
            return IntMatrix.model_validate(payload)
        except (ValidationError, ValueError, TypeError) as e:
            raise UsageError(f"invalid matrix in {self._file_reader.file_path}: {e}") from e

    def parse_graph(self) -> BipartiteGraph:
        """A graph in the one-based form ``{"left": m, "right": l, "edges": [[i, j], ...]}``.

        Raises:
            UsageError: If the payload is not a valid graph
        """
        payload = self._payload("graph")
        try:
            return BipartiteGraph.from_payload(payload)
        except (ValidationError, ValueError, TypeError, KeyError) as e:
            raise UsageError(f"invalid graph in {self._file_reader.file_path}: {e}") from e


def load_point_set(path: str) -> PointSet:
    """Read a point set from a JSON file."""
    return ArtifactParser(FileReader(path)).parse_point_set()


def load_matrix(path: str) -> IntMatrix:
    """Read a matrix from a JSON file."""
    return ArtifactParser(FileReader(path)).parse_matrix()


def load_graph(path: str) -> BipartiteGraph:
    """Read a bipartite graph from a JSON file."""
    return ArtifactParser(FileReader(path)).parse_graph()
