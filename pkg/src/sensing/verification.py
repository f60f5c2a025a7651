"""Exact sparse-sensing verification and the construction pipeline.

A matrix senses l-sparse vectors iff no nonzero vector with at most l nonzero
coordinates lies in its kernel, i.e. iff every l columns are independent. A
dependent set of fewer than l columns extends to a dependent set of exactly l
columns, so only the l-subsets are checked.
"""
from functools import partial
from itertools import combinations
from math import ceil, comb

from loguru import logger

from src.core.errors import UsageError, check_budget
from src.core.parallel import ordered_first
from src.core.settings import settings
from src.graphs.bipartite import complete_bipartite, edge_bound, greedy_girth_graph
from src.linalg.exact import columns_independent
from src.pointset.construction import build_sn
from src.schemas.matrices import IntMatrix
from src.schemas.points import Partition
from src.schemas.sensing import CorollaryRow, SensingReport
from src.sensing.difference import assemble_matrix, difference_set

RELATIVE_TOLERANCE = 1e-9


def _dependent_subset(matrix: IntMatrix, cols: tuple[int, ...]) -> tuple[int, ...] | None:
    return None if columns_independent(matrix, cols) else cols


def verify_sensing(
    matrix: IntMatrix,
    ell: int,
    *,
    budget: int | None = None,
    threads: int | None = None,
) -> SensingReport:
    """Check exactly that every ``ell`` columns of the matrix are independent.

    Subsets are enumerated lexicographically and the first dependent one is the
    witness, whatever the number of workers.

    Args:
        matrix (IntMatrix): The candidate sensing matrix
        ell (int): Sparsity level, 1 <= ell <= number of columns
        budget (int | None): Maximum number of subsets; None uses the configured budget
        threads (int | None): Worker cap

    Returns:
        SensingReport: The verdict with the witness on failure

    Raises:
        UsageError: If ell is out of range
        CapacityError: If C(d, ell) exceeds the budget
    """
    if not 1 <= ell <= matrix.cols:
        raise UsageError(f"ell must satisfy 1 <= ell <= {matrix.cols}, got {ell}")
    limit = settings.budget_config.resolve(settings.budget_config.SUBSET_BUDGET, budget)
    check_budget("column subset enumeration", comb(matrix.cols, ell), limit)
    logger.info(f"Verifying {ell}-sparse sensing of a {matrix.rows}x{matrix.cols} matrix")
    witness = ordered_first(partial(_dependent_subset, matrix), combinations(range(matrix.cols), ell), threads=threads)
    if witness is None:
        logger.success(f"Every {ell} columns of the {matrix.rows}x{matrix.cols} matrix are independent")
    else:
        logger.warning(f"Columns {witness} are dependent")
    return SensingReport(
        n=matrix.rows,
        d=matrix.cols,
        ell=ell,
        verified=witness is None,
        witness=witness,
        sup_norm=matrix.sup_norm(),
    )


def senses(matrix: IntMatrix, ell: int, *, budget: int | None = None, threads: int | None = None) -> bool:
    """Sensing property for any ell >= 1, including ell above the column count.

    With ell >= d the property says all d columns are independent; a matrix
    without columns senses vacuously.
    """
    if matrix.cols == 0:
        return True
    return bool(verify_sensing(matrix, min(ell, matrix.cols), budget=budget, threads=threads).verified)


def corollary_partition(n: int) -> Partition:
    """I = the first ceil((n + 2) / 2) points of S_n, J = the rest."""
    k = n + 2
    return Partition.split_at(k, ceil(k / 2))


def build_corollary_matrix(
    n: int,
    ell: int,
    *,
    verify: bool = True,
    budget: int | None = None,
    threads: int | None = None,
) -> tuple[IntMatrix, SensingReport]:
    """Build an n x d sensing matrix with entries in {-2, .., 2} from S_n.

    The girth graph is complete bipartite for ell <= 3 and greedy (left-major
    order) for ell >= 4.

    Args:
        n (int): Number of rows, at least 2
        ell (int): Sparsity level, 1 <= ell <= n - 1
        verify (bool): Run the exact sensing check
        budget (int | None): Subset budget of the check
        threads (int | None): Worker cap of the check

    Returns:
        tuple[IntMatrix, SensingReport]: The matrix and its report

    Raises:
        UsageError: If n or ell is out of range
        CapacityError: If the check exceeds the budget
    """
    if n < 2 or not 1 <= ell <= n - 1:
        raise UsageError(f"the construction needs n >= 2 and 1 <= ell <= n - 1, got n={n}, ell={ell}")
    points = build_sn(n)
    partition = corollary_partition(n)
    m, l = len(partition.left), len(partition.right)  # noqa: E741
    if ell <= 3:
        graph, kind = complete_bipartite(m, l), "complete"
    else:
        graph, kind = greedy_girth_graph(m, l, ell), "greedy-left-major"
    matrix = assemble_matrix(difference_set(points, partition, graph))
    bound = edge_bound(n + 2, ell)
    notes = [f"partition: first {m} points of S_{n} vs the remaining {l}"]
    if matrix.sup_norm() > 2:
        notes.append(f"sup norm {matrix.sup_norm()} exceeds 2")
        logger.warning(f"Construction for n={n} has sup norm {matrix.sup_norm()}")
    verified, witness = None, None
    if verify:
        checked = verify_sensing(matrix, ell, budget=budget, threads=threads)
        verified, witness = checked.verified, checked.witness
    logger.info(f"Built a {n}x{matrix.cols} matrix ({kind} graph), edge bound {bound:.4f}")
    report = SensingReport(
        n=n,
        d=matrix.cols,
        ell=ell,
        verified=verified,
        witness=witness,
        sup_norm=matrix.sup_norm(),
        bound=bound,
        partition=partition,
        graph_kind=kind,
        notes=tuple(notes),
    )
    return matrix, report


def corollary_table(ns: list[int], ell: int) -> list[CorollaryRow]:
    """Compare the pipeline's column count with the edge bound for several n.

    Args:
        ns (list[int]): Row counts, each at least ell + 1
        ell (int): Sparsity level

    Returns:
        list[CorollaryRow]: One row per n, in the given order
    """
    rows = []
    for n in ns:
        matrix, report = build_corollary_matrix(n, ell, verify=False)
        bound = report.bound
        rows.append(
            CorollaryRow(
                n=n,
                ell=ell,
                d=matrix.cols,
                bound=bound,
                margin=matrix.cols - bound,
                ratio=matrix.cols / n,
                meets_bound=matrix.cols >= bound * (1 - RELATIVE_TOLERANCE),
            )
        )
    return rows


def ratios_increasing(rows: list[CorollaryRow]) -> bool:
    """Whether d / n strictly increases along the table."""
    return all(a.ratio < b.ratio for a, b in zip(rows, rows[1:], strict=False))
