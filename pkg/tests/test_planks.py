"""
Tests for projections, exact widths, hull membership and the plank bounds.
"""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.core.errors import CapacityError, UsageError
from src.planks.bounds import check_gap_bound, plank_witness
from src.planks.projection import max_gap, min_projection_direction, project
from src.planks.width import (
    contains_point,
    squared_extent,
    width_exact,
    width_upper_bound,
    width_with_direction,
)
from src.pointset.covering import covering_number
from src.schemas.numbers import Sentinel
from src.schemas.planks import Direction
from src.schemas.points import PointSet
from tests.oracles import squared_width_by_pairs

SQUARE = PointSet.of([(0, 0), (2, 0), (0, 2), (2, 2)])
CUBE = PointSet.of([(x, y, z) for x in range(2) for y in range(2) for z in range(2)])


@st.composite
def planar_sets(draw, min_size=1, max_size=8):
    points = draw(
        st.lists(
            st.tuples(st.integers(-4, 4), st.integers(-4, 4)), min_size=min_size, max_size=max_size, unique=True
        )
    )
    return PointSet.of(points)


def test_project_five_points(five_points):
    profile = project(five_points, Direction.of((1, 1)))
    assert profile.values == (0, 3, 4)
    assert profile.m == 3
    assert [c.members for c in profile.membership] == [(0,), (1, 2), (3, 4)]
    assert max_gap(profile).fraction == Fraction(9, 2)


def test_project_canonicalizes_the_direction(five_points):
    assert project(five_points, Direction.of((-2, -2))).values == (0, 3, 4)
    with pytest.raises(UsageError):
        project(five_points, Direction.of((1, 0, 0)))


def test_max_gap_of_a_single_value():
    profile = project(PointSet.of([(0, 1), (1, 1)]), Direction.of((0, 1)))
    assert profile.m == 1
    assert max_gap(profile) is Sentinel.INFINITE


def test_width_examples(five_points, unit_square):
    assert width_exact(unit_square).fraction == 1
    assert width_exact(PointSet.of([(0, 0), (1, 0), (0, 1)])).fraction == Fraction(1, 2)
    assert width_exact(five_points).fraction == Fraction(5, 2)
    assert width_exact(CUBE).fraction == 1
    assert width_exact(PointSet.of([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)])).fraction == Fraction(1, 3)
    assert width_exact(PointSet.of([(3,), (-2,), (0,)])).fraction == 25


def test_width_of_lower_dimensional_sets():
    value, normal = width_with_direction(PointSet.of([(0, 0), (1, 1), (3, 3)]))
    assert value == 0
    assert normal == (1, -1)
    assert width_exact(PointSet.of([(1, 2, 3)])).fraction == 0
    assert width_exact(PointSet.of([(0, 0, 0), (1, 0, 0), (0, 1, 0)])).fraction == 0


def test_width_refuses_high_dimensions():
    points = PointSet.of([(0, 0, 0, 0), (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)])
    with pytest.raises(CapacityError):
        width_exact(points)
    with pytest.raises(UsageError):
        width_exact(PointSet(dim=2, points=()))


@settings(max_examples=200, deadline=None)
@given(planar_sets())
def test_planar_width_matches_pair_oracle(points):
    assert width_exact(points).fraction == squared_width_by_pairs(list(points.points))


@settings(max_examples=60, deadline=None)
@given(planar_sets(), st.tuples(st.integers(-5, 5), st.integers(-5, 5)))
def test_width_is_translation_invariant(points, offset):
    assert width_exact(points.translate(offset)) == width_exact(points)


@settings(max_examples=60, deadline=None)
@given(planar_sets())
def test_sampled_width_bounds_exact_width_from_above(points):
    bound = width_upper_bound(points, samples=30, seed=1)
    assert not bound.certified
    assert bound.fraction >= width_exact(points).fraction


def test_sampled_width_works_in_four_dimensions():
    points = PointSet.of([(0, 0, 0, 0), (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)])
    bound = width_upper_bound(points, samples=10, seed=4)
    assert bound.fraction <= 1
    assert width_upper_bound(points, samples=10, seed=4) == bound


def test_gap_bound_examples(five_points, unit_square):
    five = check_gap_bound(five_points, Direction.of((1, 1)))
    assert five.holds and not five.vacuous
    assert five.lhs.fraction == 18
    square = check_gap_bound(unit_square, Direction.of((1, 0)))
    assert square.holds
    assert square.lhs.fraction == square.squared_width.fraction == 1


def test_gap_bound_is_vacuous_for_one_value():
    report = check_gap_bound(PointSet.of([(0, 1), (2, 1)]), Direction.of((0, 1)))
    assert report.vacuous and report.holds
    assert report.max_gap is Sentinel.INFINITE
    assert report.lhs is None


def test_gap_bound_on_random_sets_and_directions():
    rng = random.Random(31)
    for _ in range(100):
        points = PointSet.of(list({(rng.randint(-5, 5), rng.randint(-5, 5)) for _ in range(rng.randint(2, 8))}))
        squared_width = width_exact(points).fraction
        for _ in range(50):
            vector = (rng.randint(-4, 4), rng.randint(-4, 4))
            if not any(vector):
                continue
            profile = project(points, Direction.of(vector))
            if profile.m < 2:
                continue
            assert max_gap(profile).fraction * (profile.m - 1) ** 2 >= squared_width


def random_spatial_set(rng, max_size=8):
    return PointSet.of(
        list({tuple(rng.randint(-5, 5) for _ in range(3)) for _ in range(rng.randint(2, max_size))})
    )


def test_gap_bound_on_random_spatial_sets():
    rng = random.Random(37)
    for _ in range(60):
        points = random_spatial_set(rng)
        squared_width = width_exact(points).fraction
        for _ in range(60):
            vector = tuple(rng.randint(-4, 4) for _ in range(3))
            if not any(vector):
                continue
            report = check_gap_bound(points, Direction.of(vector))
            assert report.holds
            assert report.squared_width.fraction == squared_width


SPATIAL_DIRECTIONS = [
    (x, y, z) for x in range(-3, 4) for y in range(-3, 4) for z in range(-3, 4) if (x, y, z) != (0, 0, 0)
]


def test_spatial_width_is_sound_and_attained():
    rng = random.Random(41)
    for _ in range(40):
        points = random_spatial_set(rng)
        squared_width, normal = width_with_direction(points)
        assert squared_extent(points.points, normal) == squared_width
        for vector in SPATIAL_DIRECTIONS:
            assert squared_extent(points.points, vector) >= squared_width


@st.composite
def spatial_sets(draw, min_size=2, max_size=7):
    points = draw(st.lists(st.tuples(*[st.integers(-3, 3)] * 3), min_size=min_size, max_size=max_size, unique=True))
    return PointSet.of(points)


@settings(max_examples=40, deadline=None)
@given(spatial_sets())
def test_min_projection_direction_realizes_the_covering_number_in_space(points):
    direction, m = min_projection_direction(points)
    assert m == covering_number(points)[0]
    assert project(points, direction).m == m
    assert m <= max(1, points.size - 2)


@settings(max_examples=60, deadline=None)
@given(planar_sets(min_size=2))
def test_min_projection_direction_realizes_the_covering_number(points):
    direction, m = min_projection_direction(points)
    assert m == covering_number(points)[0]
    assert project(points, direction).m == m
    assert m <= max(1, points.size - points.dim + 1)


def test_plank_avoiding_the_centre_of_a_square():
    witness = plank_witness(SQUARE, PointSet.of([(1, 1)]))
    assert witness.branch == "k<n"
    assert witness.squared_bound.fraction == 1
    assert witness.squared_width.fraction >= 1
    assert witness.holds


def test_plank_of_a_body_without_points():
    witness = plank_witness(SQUARE, PointSet(dim=2, points=()))
    assert witness.k == 0
    assert witness.plank == witness.body_range
    assert witness.squared_width.fraction == 4
    assert witness.holds


def test_plank_avoiding_the_corners(unit_square):
    witness = plank_witness(unit_square, unit_square)
    assert witness.branch == "k>=n"
    assert witness.squared_bound.fraction == Fraction(1, 16)
    assert witness.direction.vector == (0, 1)
    assert witness.breakpoints == (0, 1)
    assert witness.squared_width.fraction == 1
    assert witness.holds


def test_plank_preconditions(unit_square):
    with pytest.raises(UsageError):
        plank_witness(unit_square, PointSet.of([(3, 3)]))
    with pytest.raises(UsageError):
        plank_witness(PointSet(dim=2, points=()), PointSet(dim=2, points=()))
    with pytest.raises(UsageError):
        plank_witness(unit_square, PointSet.of([(0, 0, 0)]))


def test_plank_bound_on_random_inner_points():
    rng = random.Random(41)
    body = PointSet.of([(0, 0), (6, 0), (0, 6), (6, 6)])
    for _ in range(40):
        inner = {(rng.randint(0, 6), rng.randint(0, 6)) for _ in range(rng.randint(1, 6))}
        assert plank_witness(body, PointSet.of(sorted(inner))).holds


def test_contains_point_in_the_plane(unit_square):
    assert contains_point(unit_square, (0, 0))
    assert contains_point(SQUARE, (1, 1))
    assert not contains_point(unit_square, (2, 0))
    segment = PointSet.of([(0, 0), (2, 2)])
    assert contains_point(segment, (1, 1))
    assert not contains_point(segment, (1, 0))
    assert not contains_point(segment, (3, 3))
    single = PointSet.of([(1, 1)])
    assert contains_point(single, (1, 1)) and not contains_point(single, (1, 2))


def test_contains_point_in_space():
    assert contains_point(CUBE, (1, 0, 1))
    assert not contains_point(CUBE, (2, 0, 0))
    triangle = PointSet.of([(0, 0, 0), (1, 0, 0), (0, 1, 0)])
    assert contains_point(triangle, (0, 0, 0))
    assert not contains_point(triangle, (0, 0, 1))
    assert not contains_point(triangle, (1, 1, 0))
    with pytest.raises(UsageError):
        contains_point(triangle, (0, 0))
