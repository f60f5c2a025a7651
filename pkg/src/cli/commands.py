"""Subcommand handlers.

Every handler takes the parsed arguments and returns a RunReport; the caller
renders it and derives the exit status from its checks.
"""
import argparse
from typing import Any

from src.cli import repro
from src.core.errors import AmbiguityError, UsageError
from src.core.settings import settings
from src.data_providers.file.encoder import ReportEncoder, write_text
from src.data_providers.file.parser import load_matrix, load_point_set
from src.graphs.bipartite import complete_bipartite, edge_bound, greedy_girth_graph
from src.graphs.girth import girth, girth_exceeds
from src.planks.bounds import check_gap_bound, plank_witness
from src.planks.projection import max_gap, project
from src.planks.width import width_exact, width_upper_bound
from src.pointset.construction import build_sn
from src.pointset.covering import coverable_by, covering_number, grid_bound_check, search_extremal
from src.schemas.numbers import Sentinel
from src.schemas.planks import Direction
from src.schemas.reports import CheckResult, RunReport
from src.sensing.recovery import recover
from src.sensing.verification import build_corollary_matrix, verify_sensing

# arguments that do not change the result
_UNECHOED = {"handler", "threads", "verbose", "command"}


def parse_vector(text: str) -> tuple[int, ...]:
    """Parse a comma-separated integer vector such as ``"2,-2,-4"``.

    Raises:
        UsageError: If an entry is not an integer
    """
    try:
        return tuple(int(part) for part in text.split(",") if part.strip())
    except ValueError as e:
        raise UsageError(f"not an integer vector: {text!r}") from e


def _report(args: argparse.Namespace, outputs: dict[str, Any], checks: list[CheckResult] | None = None) -> RunReport:
    inputs = {key: value for key, value in sorted(vars(args).items()) if key not in _UNECHOED}
    return RunReport(
        command=args.command,
        inputs=inputs,
        outputs=outputs,
        checks=checks or [],
        version=settings.base_config.VERSION,
    )


def _budget(args: argparse.Namespace) -> int | None:
    return getattr(args, "budget", None)


def _threads(args: argparse.Namespace) -> int | None:
    return getattr(args, "threads", None)


def cmd_sn(args: argparse.Namespace) -> RunReport:
    """Emit S_n."""
    points = build_sn(args.n)
    return _report(args, {"point_set": points.model_dump(mode="json")})


def cmd_cover(args: argparse.Namespace) -> RunReport:
    """Covering number with certificate, or coverability by at most ``--max-t`` hyperplanes."""
    points = load_point_set(args.input)
    if args.max_t is not None:
        certificate = coverable_by(points, args.max_t, budget=_budget(args))
        outputs = {"max_t": args.max_t, "coverable": certificate is not None}
        checks = []
        if certificate is not None:
            outputs["certificate"] = certificate.model_dump(mode="json")
            checks.append(CheckResult(name="certificate validates", passed=certificate.validate_against(points)))
        return _report(args, outputs, checks)

    number, certificate = covering_number(points, budget=_budget(args))
    bound = max(1, points.size - points.dim + 1)
    outputs = {
        "k": points.size,
        "n": points.dim,
        "covering_number": number,
        "certificate": certificate.model_dump(mode="json"),
    }
    checks = [
        CheckResult(name="certificate validates", passed=certificate.validate_against(points)),
        CheckResult(
            name="covering number <= max(1, k - n + 1)",
            passed=number <= bound,
            details={"covering_number": number, "bound": bound},
        ),
    ]
    if args.cube is not None:
        grid = grid_bound_check(points, args.cube, budget=_budget(args))
        outputs["grid_bounds"] = grid.model_dump(mode="json", exclude={"certificate"})
        checks.append(
            CheckResult(
                name="integer-cube bounds",
                passed=grid.passed,
                details={"upper_applies": grid.upper_applies, "lower_applies": grid.lower_applies},
            )
        )
    return _report(args, outputs, checks)


def cmd_graph(args: argparse.Namespace) -> RunReport:
    """Complete or greedy bipartite graph with its girth."""
    if args.complete:
        graph = complete_bipartite(args.m, args.l)
    else:
        graph = greedy_girth_graph(args.m, args.l, args.ell, args.order)
    value = girth(graph)
    outputs = {
        "graph": graph.to_payload(),
        "edges": len(graph.edges),
        "girth": value.value if isinstance(value, Sentinel) else value,
        "edge_bound": edge_bound(args.m + args.l, args.ell),
    }
    checks = [CheckResult(name="girth > ell", passed=girth_exceeds(graph, args.ell), details={"ell": args.ell})]
    if args.graphml:
        write_text(args.graphml, ReportEncoder.encode_graphml(graph))
    return _report(args, outputs, checks)


def cmd_build(args: argparse.Namespace) -> RunReport:
    """Sensing matrix from S_n with its report."""
    matrix, report = build_corollary_matrix(
        args.n, args.ell, verify=not args.no_verify, budget=_budget(args), threads=_threads(args)
    )
    checks = [
        CheckResult(name="sup norm <= 2", passed=report.sup_norm <= 2, details={"sup_norm": report.sup_norm}),
    ]
    if report.verified is not None:
        checks.append(
            CheckResult(
                name=f"{args.ell}-sparse sensing",
                passed=report.verified,
                details={"witness": list(report.witness) if report.witness else None},
            )
        )
    return _report(
        args, {"matrix": matrix.model_dump(mode="json"), "report": report.model_dump(mode="json")}, checks
    )


def cmd_verify(args: argparse.Namespace) -> RunReport:
    """Exact l-sparse sensing check of a matrix file."""
    matrix = load_matrix(args.matrix)
    report = verify_sensing(matrix, args.ell, budget=_budget(args), threads=_threads(args))
    check = CheckResult(
        name=f"{args.ell}-sparse sensing",
        passed=bool(report.verified),
        details={"witness": list(report.witness) if report.witness else None},
    )
    return _report(args, {"report": report.model_dump(mode="json")}, [check])


def cmd_recover(args: argparse.Namespace) -> RunReport:
    """Exact sparse recovery from a measurement vector."""
    matrix = load_matrix(args.matrix)
    measurement = parse_vector(args.y)
    try:
        solution = recover(matrix, measurement, args.s, args.bound, budget=_budget(args))
    except AmbiguityError as e:
        check = CheckResult(
            name="unique solution", passed=False, details={"first": list(e.first), "second": list(e.second)}
        )
        return _report(args, {"solution": None}, [check])
    if solution is None:
        return _report(args, {"solution": None}, [CheckResult(name="solution found", passed=False)])
    check = CheckResult(name="residual is zero", passed=matrix.matvec(solution) == measurement)
    return _report(args, {"solution": list(solution)}, [check])


def cmd_project(args: argparse.Namespace) -> RunReport:
    """Projection profile along a direction, optionally with the gap bound."""
    points = load_point_set(args.input)
    vector = parse_vector(args.dir)
    if not any(vector):
        raise UsageError("the direction must be nonzero")
    direction = Direction.of(vector)
    profile = project(points, direction)
    gap = max_gap(profile)
    outputs = {
        "profile": profile.model_dump(mode="json"),
        "max_gap": gap.value if isinstance(gap, Sentinel) else gap.model_dump(mode="json"),
    }
    checks = []
    if args.check_gap:
        report = check_gap_bound(points, direction)
        outputs["gap_bound"] = report.model_dump(mode="json")
        checks.append(CheckResult(name="gap bound", passed=report.holds, details={"vacuous": report.vacuous}))
    return _report(args, outputs, checks)


def cmd_width(args: argparse.Namespace) -> RunReport:
    """Exact squared width, or the sampled non-certified bound."""
    points = load_point_set(args.input)
    if args.sampled:
        value = width_upper_bound(points, samples=args.samples, seed=args.seed)
    else:
        value = width_exact(points)
    return _report(args, {"squared_width": value.model_dump(mode="json")})


def cmd_plank(args: argparse.Namespace) -> RunReport:
    """Point-free plank witness."""
    body = load_point_set(args.body)
    points = load_point_set(args.points)
    witness = plank_witness(body, points, budget=_budget(args))
    check = CheckResult(
        name=witness.label,
        passed=witness.holds,
        details={"branch": witness.branch, "squared_width": str(witness.squared_width.fraction)},
    )
    return _report(args, {"witness": witness.model_dump(mode="json")}, [check])


def cmd_repro(args: argparse.Namespace) -> RunReport:
    """Named reproduction, or all of them."""
    names = list(repro.SCENARIOS) if args.name == "all" else [args.name]
    outputs: dict[str, Any] = {}
    checks: list[CheckResult] = []
    for name in names:
        scenario_outputs, scenario_checks = repro.run_scenario(name, budget=_budget(args), threads=_threads(args))
        if len(names) == 1:
            outputs, checks = scenario_outputs, scenario_checks
        else:
            outputs[name] = scenario_outputs
            checks.extend(check.model_copy(update={"name": f"{name}: {check.name}"}) for check in scenario_checks)
    return _report(args, outputs, checks)


def cmd_search(args: argparse.Namespace) -> RunReport:
    """Search C_n(T) for extremal subsets."""
    report = search_extremal(
        args.n, args.cube, args.k, samples=args.samples, seed=args.seed, budget=_budget(args)
    )
    outputs = report.model_dump(mode="json")
    if report.found is not None:
        outputs["point_set"] = outputs.pop("found")
    return _report(args, outputs)
