"""End-to-end reproductions of the worked examples and claims.

Each scenario takes ``budget`` and ``threads`` and returns its outputs and a
list of checks.
"""
from collections.abc import Callable
from typing import Any

from loguru import logger

from src.graphs.bipartite import complete_bipartite
from src.planks.bounds import check_gap_bound, plank_witness
from src.planks.projection import min_projection_direction
from src.pointset.construction import build_sn
from src.pointset.covering import coverable_by, covering_number, grid_bound_check, search_extremal
from src.schemas.matrices import IntMatrix
from src.schemas.planks import Direction
from src.schemas.points import Partition, PointSet
from src.schemas.reports import CheckResult
from src.sensing.theorems import theorem_matrix1_converse, theorem_matrix1_forward, theorem_point_columns
from src.sensing.verification import build_corollary_matrix, corollary_table, ratios_increasing, verify_sensing

ScenarioResult = tuple[dict[str, Any], list[CheckResult]]

EXAMPLE_MATRIX = IntMatrix.from_rows(
    [
        [1, -1, 1, -1, 1, -1],
        [-1, -1, -1, -1, -2, -2],
        [-1, -1, -2, -2, 0, 0],
    ]
)
COUNTEREXAMPLE_MATRIX = IntMatrix.from_rows([[2, 1, 3, 2], [1, 2, 1, 2]])
FIVE_POINTS = PointSet.of([(0, 0), (2, 1), (1, 2), (3, 1), (2, 2)])
UNIT_SQUARE = PointSet.of([(0, 0), (1, 0), (0, 1), (1, 1)])
# the unit square scaled by 2, so that its centre is an integer point
SQUARE = PointSet.of([(0, 0), (2, 0), (0, 2), (2, 2)])


def sn_covering(*, budget: int | None = None, threads: int | None = None) -> ScenarioResult:
    """S_n needs exactly three parallel hyperplanes for n = 1..8."""
    rows, checks = [], []
    for n in range(1, 9):
        points = build_sn(n)
        number, certificate = covering_number(points, budget=budget)
        rows.append({"n": n, "covering_number": number, "normal": list(certificate.normal.coordinates)})
        checks.append(
            CheckResult(
                name=f"covering number of S_{n} is 3",
                passed=number == 3 and certificate.validate_against(points),
                details={"covering_number": number},
            )
        )
    return {"instances": rows}, checks


def example_63(*, budget: int | None = None, threads: int | None = None) -> ScenarioResult:
    """The 3 x 6 matrix from S_3 and K_{3,2} senses 3-sparse vectors."""
    matrix, report = build_corollary_matrix(3, 2, verify=False)
    sensing = verify_sensing(matrix, 3, budget=budget, threads=threads)
    checks = [
        CheckResult(name="matrix matches the worked example", passed=matrix == EXAMPLE_MATRIX),
        CheckResult(name="3-sparse sensing", passed=bool(sensing.verified), details={"subsets": 20}),
        CheckResult(name="sup norm is 2", passed=matrix.sup_norm() == 2),
    ]
    notes = ["ell = 3 = n lies outside 1 <= ell <= n - 1; the example is verified directly"]
    return {"matrix": matrix.model_dump(mode="json"), "report": sensing.model_dump(mode="json"), "notes": notes}, checks


def counterexample_2x4(*, budget: int | None = None, threads: int | None = None) -> ScenarioResult:
    """A 2-sparse sensing point-column matrix whose points three parallel lines cover."""
    sensing = verify_sensing(COUNTEREXAMPLE_MATRIX, 2, budget=budget, threads=threads)
    points = PointSet.of([(0, 0), *COUNTEREXAMPLE_MATRIX.columns()])
    number, certificate = covering_number(points, budget=budget)
    theorem = theorem_point_columns(points, budget=budget)
    checks = [
        CheckResult(name="2-sparse sensing", passed=bool(sensing.verified)),
        CheckResult(name="covering number is 3", passed=number == 3, details={"k - n + 1": points.size - 1}),
        CheckResult(
            name="certificate normal (1, 1) with values 0, 3, 4",
            passed=certificate.normal.coordinates == (1, 1) and certificate.values == (0, 3, 4),
        ),
        CheckResult(name="point-column implication holds", passed=theorem.implication_holds),
    ]
    outputs = {
        "point_set": points.model_dump(mode="json"),
        "certificate": certificate.model_dump(mode="json"),
        "theorem": theorem.model_dump(mode="json"),
    }
    return outputs, checks


def corollary_bound(*, budget: int | None = None, threads: int | None = None) -> ScenarioResult:
    """d >= ((n + 2) / 2) ** (9 / 7) at ell = 3 for n = 6, 10, 14, with d / n increasing."""
    rows = corollary_table([6, 10, 14], 3)
    checks = [
        CheckResult(
            name=f"n = {row.n}: d >= bound",
            passed=row.meets_bound and row.d == ((row.n + 3) // 2) * ((row.n + 2) // 2),
            details={"d": row.d, "bound": row.bound, "margin": row.margin},
        )
        for row in rows
    ]
    checks.append(CheckResult(name="d / n strictly increasing", passed=ratios_increasing(rows)))
    return {"table": [row.model_dump(mode="json") for row in rows]}, checks


def gap_bound(*, budget: int | None = None, threads: int | None = None) -> ScenarioResult:
    """Gap and plank bounds on small planar sets."""
    five = check_gap_bound(FIVE_POINTS, Direction.of((1, 1)))
    square = check_gap_bound(UNIT_SQUARE, Direction.of((1, 0)))
    _, m = min_projection_direction(FIVE_POINTS, budget=budget)
    centre = plank_witness(SQUARE, PointSet.of([(1, 1)]), budget=budget)
    empty = plank_witness(SQUARE, PointSet(dim=2, points=()), budget=budget)
    corners = plank_witness(UNIT_SQUARE, UNIT_SQUARE, budget=budget)
    checks = [
        CheckResult(name="five-point set along (1, 1)", passed=five.holds, details={"m": five.m}),
        CheckResult(name="unit square along (1, 0)", passed=square.holds, details={"m": square.m}),
        CheckResult(name="five-point set: m = 3 <= k - n + 1", passed=m == 3),
        CheckResult(name="plank avoiding the centre of a square", passed=centre.holds),
        CheckResult(name="plank of a square with no points", passed=empty.holds),
        CheckResult(name="plank avoiding the corners of a square", passed=corners.holds),
    ]
    outputs = {
        "five_points": five.model_dump(mode="json"),
        "unit_square": square.model_dump(mode="json"),
        "planks": [w.model_dump(mode="json") for w in (centre, empty, corners)],
    }
    return outputs, checks


def grid_bounds(*, budget: int | None = None, threads: int | None = None) -> ScenarioResult:
    """Both integer-cube implications on S_n inside C_n(1), plus an exhaustive extremal search."""
    reports = [grid_bound_check(build_sn(n), 1, budget=budget) for n in range(1, 5)]
    checks = [
        CheckResult(
            name=f"S_{r.n} in C_{r.n}(1)",
            passed=r.passed,
            details={"upper_applies": r.upper_applies, "lower_applies": r.lower_applies},
        )
        for r in reports
    ]
    search = search_extremal(2, 1, budget=budget)
    found = search.found is not None and coverable_by(search.found, 2, budget=budget) is None
    checks.append(CheckResult(name="C_2(1) has a 4-subset needing 3 lines", passed=found))
    outputs = {
        "reports": [r.model_dump(mode="json") for r in reports],
        "search": search.model_dump(mode="json"),
    }
    return outputs, checks


def converse(*, budget: int | None = None, threads: int | None = None) -> ScenarioResult:
    """Both directions of the difference-matrix theorem on S_2 and S_3."""
    checks, outputs = [], {}
    for n in (2, 3):
        report = theorem_matrix1_converse(build_sn(n), budget=budget, threads=threads)
        outputs[f"S_{n}"] = report.model_dump(mode="json")
        checks.append(
            CheckResult(
                name=f"S_{n}: every bipartition senses {n}-sparse vectors and no fewer than k - n + 1 cover",
                passed=report.hypothesis_holds and report.implication_holds,
                details={"partitions_checked": report.partitions_checked},
            )
        )
    forward = theorem_matrix1_forward(
        build_sn(3), Partition.split_at(5, 3), complete_bipartite(3, 2), 2, budget=budget, threads=threads
    )
    outputs["forward"] = forward.model_dump(mode="json")
    checks.append(
        CheckResult(
            name="S_3 with K_{3,2}: hypotheses and conclusion hold",
            passed=forward.covering_hypothesis and forward.girth_hypothesis and forward.conclusion,
        )
    )
    return outputs, checks


SCENARIOS: dict[str, Callable[..., ScenarioResult]] = {
    "sn-covering": sn_covering,
    "example-63": example_63,
    "counterexample-2x4": counterexample_2x4,
    "corollary-bound": corollary_bound,
    "gap-bound": gap_bound,
    "grid-bounds": grid_bounds,
    "converse": converse,
}


def run_scenario(name: str, *, budget: int | None = None, threads: int | None = None) -> ScenarioResult:
    """Run one scenario by name."""
    logger.info(f"Running reproduction {name}")
    return SCENARIOS[name](budget=budget, threads=threads)
