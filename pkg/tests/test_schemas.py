"""
Tests for the schema models and their JSON encoding.
"""

import json
from fractions import Fraction

import pytest
from pydantic import ValidationError

from src.schemas.graphs import BipartiteGraph
from src.schemas.matrices import IntMatrix, KernelVector, canonical_integer_vector
from src.schemas.numbers import ExactRational, Sentinel, decode_int, encode_int
from src.schemas.points import CoveringCertificate, Partition, PointSet
from src.schemas.reports import CheckResult, RunReport
from src.schemas.sensing import DifferenceSet, SensingReport


def test_big_integers_are_written_as_strings():
    assert encode_int(2**53 - 1) == 2**53 - 1
    assert encode_int(-(2**60)) == str(-(2**60))
    assert decode_int("123456789012345678901234567890") == 123456789012345678901234567890
    with pytest.raises(ValueError):
        decode_int(True)
    with pytest.raises(ValueError):
        decode_int(1.5)


def test_matrix_json_keeps_large_entries_exact():
    matrix = IntMatrix.from_rows([[3**40, -1], [0, 2]])
    payload = json.loads(matrix.model_dump_json())
    assert payload["entries"] == [[str(3**40), -1], [0, 2]]
    assert IntMatrix.model_validate(payload) == matrix


def test_matrix_shape_is_checked():
    with pytest.raises(ValidationError):
        IntMatrix(rows=2, cols=2, entries=(1, 2, 3))
    assert IntMatrix.from_rows([[1, 2], [3, 4]]).transpose().row(0) == (1, 3)
    assert IntMatrix.identity(2).columns() == [(1, 0), (0, 1)]


def test_canonical_vectors():
    assert canonical_integer_vector((0, -4, 6)) == (0, 2, -3)
    with pytest.raises(ValueError):
        canonical_integer_vector((0, 0))
    assert KernelVector.canonical((-2, 2)).coordinates == (1, -1)
    with pytest.raises(ValidationError):
        KernelVector(coordinates=(2, 4), dimension=2)


def test_exact_rational():
    half = ExactRational.of(Fraction(6, 12))
    assert (half.num, half.den) == (1, 2)
    assert half.fraction == Fraction(1, 2)
    with pytest.raises(ValidationError):
        ExactRational(num=2, den=4)
    with pytest.raises(ValidationError):
        ExactRational(num=1, den=0)


def test_sentinels_serialize_as_strings():
    assert json.dumps(Sentinel.ACYCLIC.value) == '"acyclic"'
    assert Sentinel("infinite") is Sentinel.INFINITE


def test_point_set_validation():
    with pytest.raises(ValidationError):
        PointSet.of([(0, 0), (0, 0)])
    with pytest.raises(ValidationError):
        PointSet.of([(0, 0), (1,)])
    with pytest.raises(ValueError):
        PointSet.of([])
    assert PointSet.of([], dim=3).size == 0


def test_partition_validation():
    assert Partition.split_at(5, 3) == Partition(left=(0, 1, 2), right=(3, 4))
    with pytest.raises(ValidationError):
        Partition(left=(0, 1), right=(1, 2))
    with pytest.raises(ValidationError):
        Partition(left=(0,), right=(2,))
    with pytest.raises(ValidationError):
        Partition(left=(), right=(0,))


def test_covering_certificate_validation(five_points):
    certificate = CoveringCertificate.from_normal(five_points, KernelVector.canonical((1, 1)))
    assert certificate.values == (0, 3, 4)
    assert certificate.validate_against(five_points)
    assert not certificate.validate_against(five_points.translate((1, 0)))
    assert not certificate.validate_against(PointSet.of([(0, 0)]))


def test_difference_set_checks_vectors(s3):
    partition = Partition.split_at(5, 3)
    with pytest.raises(ValidationError):
        DifferenceSet(base=s3, partition=partition, pairs=((0, 3),), vectors=((0, 0, 0),))
    with pytest.raises(ValidationError):
        DifferenceSet(base=s3, partition=partition, pairs=((3, 0),), vectors=((-1, 1, 1),))


def test_failed_sensing_report_needs_a_witness():
    with pytest.raises(ValidationError):
        SensingReport(n=2, d=3, ell=2, verified=False, sup_norm=1)
    with pytest.raises(ValidationError):
        SensingReport(n=2, d=3, ell=2, verified=False, witness=(0, 1, 2), sup_norm=1)


def test_graph_validation():
    with pytest.raises(ValidationError):
        BipartiteGraph(left_size=1, right_size=1, edges=((0, 1),))
    with pytest.raises(ValidationError):
        BipartiteGraph(left_size=1, right_size=1, edges=((0, 0), (0, 0)))


def test_run_report_passes_only_if_every_check_passes():
    report = RunReport(command="x", version="0", checks=[CheckResult(name="a", passed=True)])
    assert report.passed
    failed = report.model_copy(update={"checks": [*report.checks, CheckResult(name="b", passed=False)]})
    assert not failed.passed
    assert RunReport(command="x", version="0").passed
