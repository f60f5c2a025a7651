"""Shared fixtures for the hypercover test suite."""

import pytest

from src.pointset.construction import build_sn
from src.schemas.matrices import IntMatrix
from src.schemas.points import PointSet


@pytest.fixture
def example_matrix():
    """The 3x6 matrix of S_3 with the complete (3,2)-bipartite graph."""
    return IntMatrix.from_rows(
        [
            [1, -1, 1, -1, 1, -1],
            [-1, -1, -1, -1, -2, -2],
            [-1, -1, -2, -2, 0, 0],
        ]
    )


@pytest.fixture
def counterexample_matrix():
    """2x4 matrix with all 2x2 minors nonzero."""
    return IntMatrix.from_rows([[2, 1, 3, 2], [1, 2, 1, 2]])


@pytest.fixture
def five_points():
    """The origin plus the columns of the 2x4 matrix."""
    return PointSet.of([(0, 0), (2, 1), (1, 2), (3, 1), (2, 2)])


@pytest.fixture
def unit_square():
    """Corners of the unit square."""
    return PointSet.of([(0, 0), (1, 0), (0, 1), (1, 1)])


@pytest.fixture
def s3():
    """The five points of S_3."""
    return build_sn(3)


@pytest.fixture
def artifact_dir(tmp_path):
    """Directory for JSON artifacts written by a test."""
    directory = tmp_path / "artifacts"
    directory.mkdir()
    return directory
