"""
Tests for difference matrices, exact sensing verification and sparse recovery.
"""

import random
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.core.errors import AmbiguityError, CapacityError, UsageError
from src.graphs.bipartite import complete_bipartite
from src.pointset.construction import build_sn
from src.schemas.graphs import BipartiteGraph
from src.schemas.matrices import IntMatrix
from src.schemas.points import Partition, PointSet
from src.sensing.difference import assemble_matrix, difference_set, point_column_matrix, support_cardinality
from src.sensing.recovery import recover
from src.sensing.theorems import (
    bipartitions,
    theorem_matrix1_converse,
    theorem_matrix1_forward,
    theorem_point_columns,
)
from src.sensing.verification import (
    build_corollary_matrix,
    corollary_table,
    ratios_increasing,
    senses,
    verify_sensing,
)
from tests.oracles import has_sparse_null_vector


def random_matrix(rng, rows, cols, low=-2, high=2):
    return IntMatrix.from_rows([[rng.randint(low, high) for _ in range(cols)] for _ in range(rows)], cols=cols)


def test_difference_set_of_s3(s3, example_matrix):
    differences = difference_set(s3, Partition.split_at(5, 3), complete_bipartite(3, 2))
    assert differences.pairs == ((0, 3), (0, 4), (1, 3), (1, 4), (2, 3), (2, 4))
    assert differences.vectors[0] == (1, -1, -1)
    assert assemble_matrix(differences) == example_matrix
    assert differences.support == (0, 1, 2, 3, 4)


def test_support_cardinality(s3):
    differences = difference_set(s3, Partition.split_at(5, 3), complete_bipartite(3, 2))
    assert support_cardinality(differences, [0, 1, 2, 3]) == 4
    assert support_cardinality(differences) == 5
    assert support_cardinality(differences, []) == 0
    with pytest.raises(UsageError):
        support_cardinality(differences, [6])


def test_difference_set_rejects_mismatched_graph(s3):
    with pytest.raises(UsageError):
        difference_set(s3, Partition.split_at(5, 3), complete_bipartite(2, 3))
    with pytest.raises(UsageError):
        difference_set(s3, Partition.split_at(4, 2), complete_bipartite(2, 2))


def test_empty_graph_gives_matrix_without_columns(s3):
    graph = BipartiteGraph(left_size=3, right_size=2, edges=())
    matrix = assemble_matrix(difference_set(s3, Partition.split_at(5, 3), graph))
    assert (matrix.rows, matrix.cols) == (3, 0)
    assert senses(matrix, 2)


def test_example_matrix_senses_three_sparse_vectors(example_matrix):
    report = verify_sensing(example_matrix, 3)
    assert report.verified
    assert report.witness is None
    assert report.sup_norm == 2
    assert (report.n, report.d) == (3, 6)


def test_counterexample_matrix_senses_two_sparse_vectors(counterexample_matrix):
    assert verify_sensing(counterexample_matrix, 2).verified
    report = verify_sensing(counterexample_matrix, 3)
    assert not report.verified
    assert report.witness == (0, 1, 2)


def test_zero_column_is_a_witness():
    report = verify_sensing(IntMatrix.from_rows([[1, 0, 2], [0, 0, 1]]), 1)
    assert not report.verified
    assert report.witness == (1,)


def test_verify_sensing_preconditions(example_matrix):
    with pytest.raises(UsageError):
        verify_sensing(example_matrix, 0)
    with pytest.raises(UsageError):
        verify_sensing(example_matrix, 7)
    with pytest.raises(CapacityError):
        verify_sensing(example_matrix, 3, budget=10)


def test_senses_above_the_column_count(counterexample_matrix):
    assert not senses(counterexample_matrix, 9)
    assert senses(IntMatrix.from_rows([[1, 0], [0, 1]]), 5)


def test_sensing_is_monotone_in_ell():
    rng = random.Random(11)
    for _ in range(60):
        matrix = random_matrix(rng, 3, 5)
        verdicts = [verify_sensing(matrix, ell).verified for ell in range(1, 6)]
        # once a level fails every larger level fails
        assert verdicts == sorted(verdicts, reverse=True)


def test_null_vector_oracle_on_known_matrices(example_matrix, counterexample_matrix):
    assert not has_sparse_null_vector(example_matrix.row_lists(), 3)
    assert has_sparse_null_vector(example_matrix.row_lists(), 4)
    assert has_sparse_null_vector(counterexample_matrix.row_lists(), 3)
    assert has_sparse_null_vector([[1, 2, 3], [2, 4, 7], [1, 2, 4]], 2)


def test_verification_matches_brute_force_oracle_at_every_level():
    rng = random.Random(5)
    checked = 0
    for _ in range(500):
        rows, cols = rng.randint(1, 4), rng.randint(1, 6)
        matrix = random_matrix(rng, rows, cols)
        for ell in range(1, min(rows, cols) + 1):
            expected = not has_sparse_null_vector(matrix.row_lists(), ell)
            assert verify_sensing(matrix, ell).verified == expected
            checked += 1
    assert checked >= 500


def test_verification_matches_oracle_on_full_size_matrices():
    rng = random.Random(17)
    for _ in range(60):
        matrix = random_matrix(rng, 4, 6)
        for ell in range(1, 5):
            expected = not has_sparse_null_vector(matrix.row_lists(), ell)
            assert verify_sensing(matrix, ell).verified == expected


def test_verification_is_independent_of_threads(counterexample_matrix):
    single = verify_sensing(counterexample_matrix, 3, threads=1)
    pooled = verify_sensing(counterexample_matrix, 3, threads=2)
    assert single == pooled


def test_point_column_matrix(counterexample_matrix, five_points):
    assert point_column_matrix(five_points) == counterexample_matrix
    with pytest.raises(UsageError):
        point_column_matrix(PointSet.of([(1, 0), (0, 0)]))


def test_corollary_pipeline_reproduces_worked_example(example_matrix):
    matrix, report = build_corollary_matrix(3, 2)
    assert matrix == example_matrix
    assert report.verified
    assert report.graph_kind == "complete"
    assert report.partition == Partition.split_at(5, 3)


def test_corollary_pipeline_at_ten_rows():
    matrix, report = build_corollary_matrix(10, 3)
    assert matrix.cols == 36
    assert report.verified
    assert report.sup_norm <= 2
    assert report.bound == pytest.approx(6 ** (9 / 7))


def test_corollary_pipeline_uses_greedy_graph_from_ell_four():
    matrix, report = build_corollary_matrix(8, 4)
    assert report.graph_kind == "greedy-left-major"
    assert report.verified
    assert matrix.cols < 25


def test_corollary_pipeline_preconditions():
    with pytest.raises(UsageError):
        build_corollary_matrix(3, 3)
    with pytest.raises(UsageError):
        build_corollary_matrix(1, 1)
    _, report = build_corollary_matrix(6, 3, verify=False)
    assert report.verified is None


def test_corollary_table():
    rows = corollary_table([6, 10, 14], 3)
    assert [row.d for row in rows] == [16, 36, 64]
    assert all(row.meets_bound for row in rows)
    assert ratios_increasing(rows)
    assert rows[1].margin == pytest.approx(36 - 6 ** (9 / 7))


def test_recover_zero_and_example_signal(example_matrix):
    assert recover(example_matrix, [0, 0, 0], 1, 5) == (0,) * 6
    assert recover(example_matrix, [2, -2, -4], 1, 5) == (0, 0, 2, 0, 0, 0)


def test_recover_returns_none_without_a_bounded_solution(example_matrix):
    assert recover(example_matrix, [1, 0, 0], 1, 5) is None
    assert recover(example_matrix, [6, -6, -12], 1, 5) is None


def test_recover_every_one_sparse_signal(example_matrix):
    cases = 0
    for column, value in product(range(6), range(-5, 6)):
        x = [0] * 6
        x[column] = value
        assert recover(example_matrix, example_matrix.matvec(x), 1, 5) == tuple(x)
        cases += 1
    assert cases == 66


def test_recover_two_sparse_signals_with_greedy_matrix():
    matrix, report = build_corollary_matrix(8, 4)
    assert report.verified
    rng = random.Random(23)
    for _ in range(100):
        x = [0] * matrix.cols
        for column in rng.sample(range(matrix.cols), 2):
            x[column] = rng.choice([v for v in range(-3, 4) if v])
        assert recover(matrix, matrix.matvec(x), 2, 3) == tuple(x)


def test_recover_reports_ambiguity():
    with pytest.raises(AmbiguityError) as excinfo:
        recover(IntMatrix.from_rows([[1, 1]]), [1], 1, 1)
    assert excinfo.value.first == (1, 0)
    assert excinfo.value.second == (0, 1)


def test_recover_preconditions(example_matrix):
    with pytest.raises(UsageError):
        recover(example_matrix, [1, 2], 1, 5)
    with pytest.raises(UsageError):
        recover(example_matrix, [0, 0, 0], 1, 0)
    with pytest.raises(CapacityError):
        recover(example_matrix, [0, 0, 0], 3, 5, budget=5)


def test_bipartition_counts():
    assert len(list(bipartitions(4))) == 7
    assert len(list(bipartitions(5))) == 15
    assert all(0 in p.left for p in bipartitions(5))


def test_forward_theorem_on_s3(s3):
    report = theorem_matrix1_forward(s3, Partition.split_at(5, 3), complete_bipartite(3, 2), 2)
    assert report.covering_number == 3
    assert report.covering_hypothesis and report.girth_hypothesis
    assert report.girth == 4
    assert report.conclusion and report.implication_holds
    assert report.notes == ()


def test_forward_theorem_flags_ell_outside_range(s3):
    report = theorem_matrix1_forward(s3, Partition.split_at(5, 3), complete_bipartite(3, 2), 3)
    assert report.girth_hypothesis
    assert report.conclusion and report.implication_holds
    assert len(report.notes) == 1


@pytest.mark.parametrize("n, partitions", [(2, 7), (3, 15)])
def test_converse_theorem_on_sn(n, partitions):
    report = theorem_matrix1_converse(build_sn(n))
    assert report.partitions_checked == partitions
    assert report.hypothesis_holds
    assert report.covering_number == 3
    assert report.conclusion and report.implication_holds


def test_converse_theorem_stops_at_first_failing_partition(unit_square):
    report = theorem_matrix1_converse(unit_square)
    assert not report.hypothesis_holds
    assert report.failing_partition == Partition(left=(0, 3), right=(1, 2))
    assert report.partitions_checked == 4
    assert report.covering_number is None
    assert report.implication_holds


def test_converse_theorem_limits():
    with pytest.raises(CapacityError):
        theorem_matrix1_converse(PointSet.of([(i,) for i in range(11)]))
    with pytest.raises(UsageError):
        theorem_matrix1_converse(PointSet.of([(0,)]))


def test_point_column_theorem_on_counterexample(five_points):
    report = theorem_point_columns(five_points)
    assert report.covering_number == 3
    assert not report.hypothesis
    assert report.conclusion
    assert report.implication_holds


@st.composite
def origin_point_sets(draw):
    others = draw(
        st.lists(st.tuples(st.integers(-2, 2), st.integers(-2, 2)), min_size=2, max_size=5, unique=True)
    )
    return PointSet.of([(0, 0), *[p for p in others if p != (0, 0)]])


@settings(max_examples=80, deadline=None)
@given(origin_point_sets())
def test_point_column_theorem_holds_on_random_sets(points):
    if points.size < 3:
        return
    assert theorem_point_columns(points).implication_holds


def test_short_cycle_in_a_small_component_breaks_sensing():
    # a 4-cycle plus a disjoint edge passes the exactly-5-edges support count
    graph = BipartiteGraph(left_size=4, right_size=4, edges=((0, 0), (0, 1), (1, 0), (1, 1), (2, 2)))
    matrix = assemble_matrix(difference_set(build_sn(6), Partition.split_at(8, 4), graph))
    assert not verify_sensing(matrix, 5).verified
    assert verify_sensing(matrix, 4).witness == (0, 1, 2, 3)


@st.composite
def spatial_origin_point_sets(draw):
    others = draw(st.lists(st.tuples(*[st.integers(-2, 2)] * 3), min_size=2, max_size=6, unique=True))
    return PointSet.of([(0, 0, 0), *[p for p in others if p != (0, 0, 0)]])


@settings(max_examples=60, deadline=None)
@given(spatial_origin_point_sets())
def test_point_column_theorem_holds_on_random_spatial_sets(points):
    if points.size < 3:
        return
    report = theorem_point_columns(points)
    assert report.n == 3
    assert report.k <= 7
    assert report.implication_holds
