import networkx as nx
from loguru import logger

from src.core.errors import UsageError
from src.graphs.bipartite import to_networkx
from src.schemas.graphs import BipartiteGraph
from src.schemas.matrices import IntMatrix
from src.schemas.reports import RunReport


class ReportEncoder:
    """Render reports as JSON, matrices as CSV and graphs as GraphML."""

    @staticmethod
    def encode(report: RunReport) -> str:
        """Indented JSON, keys in model order, with a trailing newline."""
        return report.model_dump_json(indent=2) + "\n"

    @staticmethod
    def encode_csv(matrix: IntMatrix) -> str:
        """One matrix row per line, comma separated."""
        return matrix.to_csv()

    @staticmethod
    def encode_graphml(graph: BipartiteGraph) -> str:
        """GraphML of the networkx export; node ids are ``('L', i)`` and ``('R', j)``, zero-based."""
        return "\n".join(nx.generate_graphml(to_networkx(graph))) + "\n"


def write_text(path: str, text: str) -> None:
    """Write an artifact file.

    Raises:
        UsageError: If the file cannot be written
    """
    try:
        with open(path, "w", encoding="utf-8") as f:
            f.write(text)
    except OSError as e:
        logger.error(f"Error writing {path}: {e}")
        raise UsageError(f"cannot write {path}: {e}") from e
    logger.debug(f"Wrote {len(text)} characters to {path}")
