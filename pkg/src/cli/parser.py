"""Command-line argument parsing."""
import argparse

from src.cli import commands, repro
from src.graphs.bipartite import EdgeOrder


def _add_global_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--budget",
        type=int,
        default=argparse.SUPPRESS,
        help="enumeration budget for this run (default: per-enumeration defaults, or HYPERCOVER_BUDGET)",
    )
    parser.add_argument(
        "--threads",
        type=int,
        default=argparse.SUPPRESS,
        help="maximum number of worker processes (default: HYPERCOVER_THREADS or 1)",
    )
    parser.add_argument("--verbose", action="store_true", default=argparse.SUPPRESS, help="log at DEBUG level")


def build_parser() -> argparse.ArgumentParser:
    """Build the ``hypercover`` argument parser with one subparser per command.

    The global flags are accepted both before and after the subcommand name.
    """
    parser = argparse.ArgumentParser(
        prog="hypercover",
        description="Exact parallel-hyperplane coverings, integer sensing matrices and plank bounds.",
    )
    _add_global_flags(parser)
    subparsers = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name: str, handler, help_text: str) -> argparse.ArgumentParser:
        sub = subparsers.add_parser(name, help=help_text, description=help_text)
        _add_global_flags(sub)
        sub.set_defaults(handler=handler)
        return sub

    sn = add("sn", commands.cmd_sn, "build the point set S_n")
    sn.add_argument("--n", type=int, required=True, help="dimension n >= 1")

    cover = add("cover", commands.cmd_cover, "minimum number of parallel hyperplanes covering a point set")
    cover.add_argument("--input", required=True, help="point set JSON file")
    cover.add_argument("--max-t", dest="max_t", type=int, help="only decide coverability by at most T hyperplanes")
    cover.add_argument("--cube", type=int, help="also check the integer-cube bounds for C_n(T)")

    graph = add("graph", commands.cmd_graph, "bipartite graph without cycles of length <= ell")
    graph.add_argument("--m", type=int, required=True, help="number of left vertices")
    graph.add_argument("--l", type=int, required=True, help="number of right vertices")
    graph.add_argument("--ell", type=int, required=True, help="forbidden cycle length bound")
    graph.add_argument("--complete", action="store_true", help="emit the complete bipartite graph")
    graph.add_argument("--graphml", help="also write the graph as GraphML to this file")
    graph.add_argument(
        "--order", choices=[o.value for o in EdgeOrder], default=EdgeOrder.LEFT_MAJOR.value, help="greedy edge order"
    )

    build = add("build", commands.cmd_build, "build an n x d sensing matrix from S_n")
    build.add_argument("--n", type=int, required=True, help="number of rows n >= 2")
    build.add_argument("--ell", type=int, required=True, help="sparsity level 1 <= ell <= n - 1")
    build.add_argument("--out", help="also write the output to this file")
    build.add_argument("--format", choices=["json", "csv"], default="json", help="output format")
    build.add_argument("--no-verify", action="store_true", help="skip the exact sensing check")

    verify = add("verify", commands.cmd_verify, "check that every ell columns are independent")
    verify.add_argument("--matrix", required=True, help="matrix JSON file")
    verify.add_argument("--ell", type=int, required=True, help="sparsity level")

    recover = add("recover", commands.cmd_recover, "exact sparse integer recovery")
    recover.add_argument("--matrix", required=True, help="matrix JSON file")
    recover.add_argument("--y", required=True, help='measurement, e.g. "2,-2,-4"')
    recover.add_argument("--s", type=int, required=True, help="maximum number of nonzeros")
    recover.add_argument("--bound", type=int, required=True, help="maximum absolute entry")

    project = add("project", commands.cmd_project, "distinct projections of a point set along a direction")
    project.add_argument("--input", required=True, help="point set JSON file")
    project.add_argument("--dir", required=True, help='direction, e.g. "1,1"')
    project.add_argument("--check-gap", action="store_true", help="also check the gap bound against the width")

    width = add("width", commands.cmd_width, "squared width of the convex hull of a point set")
    width.add_argument("--input", required=True, help="point set JSON file")
    width.add_argument("--sampled", action="store_true", help="sampled upper bound, any dimension, not certified")
    width.add_argument("--samples", type=int, help="number of sampled directions")
    width.add_argument("--seed", type=int, help="seed of the direction sampler")

    plank = add("plank", commands.cmd_plank, "wide point-free plank of a convex body")
    plank.add_argument("--body", required=True, help="JSON file with the vertices of the body")
    plank.add_argument("--points", required=True, help="JSON file with the points to avoid")

    reproduce = add("repro", commands.cmd_repro, "run a named reproduction")
    reproduce.add_argument("name", choices=[*repro.SCENARIOS, "all"], help="reproduction to run")

    search = add("search", commands.cmd_search, "search C_n(T) for subsets that need 2T + 1 hyperplanes")
    search.add_argument("--n", type=int, required=True, help="dimension")
    search.add_argument("--cube", type=int, required=True, help="half side length T")
    search.add_argument("--k", type=int, help="subset size (default 2T + n)")
    search.add_argument("--samples", type=int, default=1000, help="random subsets when exhaustive search is too large")
    search.add_argument("--seed", type=int, default=0, help="seed of the subset sampler")

    return parser
