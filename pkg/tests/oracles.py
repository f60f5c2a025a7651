"""Independent brute-force oracles for the test suite.

None of these share code with the library beyond the schema types.
"""
from collections import deque
from fractions import Fraction
from itertools import combinations, product


def cofactor_det(rows):
    """Determinant by cofactor expansion along the first row."""
    size = len(rows)
    if size == 0:
        return 1
    if size == 1:
        return rows[0][0]
    total = 0
    for col in range(size):
        if rows[0][col]:
            minor = [row[:col] + row[col + 1 :] for row in rows[1:]]
            total += (-1) ** col * rows[0][col] * cofactor_det(minor)
    return total


def max_minor(rows, size):
    """Largest |det| over all size x size minors, 1 for size 0."""
    if size == 0:
        return 1
    best = 0
    nrows, ncols = len(rows), len(rows[0]) if rows else 0
    for r in combinations(range(nrows), size):
        for c in combinations(range(ncols), size):
            best = max(best, abs(cofactor_det([[rows[i][j] for j in c] for i in r])))
    return best


def _solve_pair(u, v, target):
    """Integers (a, b) with a u + b v = target for independent u, v, or None."""
    for i, k in combinations(range(len(u)), 2):
        det = u[i] * v[k] - u[k] * v[i]
        if not det:
            continue
        a_num = target[i] * v[k] - target[k] * v[i]
        b_num = u[i] * target[k] - u[k] * target[i]
        if a_num % det or b_num % det:
            return None
        a, b = a_num // det, b_num // det
        if all(a * x + b * y == z for x, y, z in zip(u, v, target, strict=True)):
            return a, b
        return None
    return None


def _pair_dependent(u, v):
    return all(u[i] * v[k] == u[k] * v[i] for i, k in combinations(range(len(u)), 2))


def has_sparse_null_vector(rows, ell):
    """Whether some nonzero integer x with at most ell nonzeros has A x = 0.

    A minimal dependent column set of size r has a primitive integer dependency
    whose coefficients are bounded by the largest (r - 1)-minor of those columns.
    All but the last two coefficients are enumerated in that box; the last two
    follow from the remaining 2-column system.
    """
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    columns = [tuple(rows[i][j] for i in range(nrows)) for j in range(ncols)]
    for r in range(1, min(ell, ncols) + 1):
        if r > nrows:
            return True
        for support in combinations(range(ncols), r):
            chosen = [columns[j] for j in support]
            if r == 1:
                if not any(chosen[0]):
                    return True
                continue
            if _pair_dependent(chosen[-2], chosen[-1]):
                return True
            bound = max(1, max_minor([[row[j] for j in support] for row in rows], r - 1))
            for coefficients in product([c for c in range(-bound, bound + 1) if c], repeat=r - 2):
                residual = [0] * nrows
                for c, column in zip(coefficients, chosen[:-2], strict=True):
                    residual = [a + c * b for a, b in zip(residual, column, strict=True)]
                solved = _solve_pair(chosen[-2], chosen[-1], [-z for z in residual])
                if solved is not None and all(solved):
                    return True
    return False


def shortest_cycle(left_size, right_size, edges):
    """Girth by deleting each edge and measuring the detour, None for a forest."""
    best = None
    for removed in edges:
        adjacency = {v: [] for v in range(left_size + right_size)}
        for i, j in edges:
            if (i, j) != removed:
                adjacency[i].append(left_size + j)
                adjacency[left_size + j].append(i)
        source, target = removed[0], left_size + removed[1]
        depth = {source: 0}
        queue = deque([source])
        while queue:
            u = queue.popleft()
            for w in adjacency[u]:
                if w not in depth:
                    depth[w] = depth[u] + 1
                    queue.append(w)
        if target in depth:
            length = depth[target] + 1
            best = length if best is None else min(best, length)
    return best


def _dot(u, x):
    return sum(a * b for a, b in zip(u, x, strict=True))


def _rank(vectors, dim):
    rows = [[Fraction(v) for v in vector] for vector in vectors]
    rank = 0
    for col in range(dim):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                factor = rows[r][col] / rows[rank][col]
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[rank], strict=True)]
        rank += 1
    return rank


def _normals(points):
    """Normals orthogonal to dim - 1 independent point differences (dims 1 to 3)."""
    dim = len(points[0])
    differences = [tuple(a - b for a, b in zip(p, q, strict=True)) for p, q in combinations(points, 2)]
    if dim == 1:
        return [(1,)]
    if dim == 2:
        return [(-d[1], d[0]) for d in differences if any(d)]
    normals = []
    for a, b in combinations(differences, 2):
        u = (a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0])
        if any(u):
            normals.append(u)
    return normals


def covering_number_by_directions(points):
    """Fewest distinct inner-product values over the candidate normals (dims 1 to 3)."""
    dim = len(points[0])
    if _rank([[a - b for a, b in zip(p, points[0], strict=True)] for p in points[1:]], dim) < dim:
        return 1
    return min(len({_dot(u, p) for p in points}) for u in _normals(points))


def squared_width_by_pairs(points):
    """Planar squared width over every perpendicular of a point difference."""
    if _rank([[a - b for a, b in zip(p, points[0], strict=True)] for p in points[1:]], 2) < 2:
        return Fraction(0)
    best = None
    for u in _normals(points):
        values = [_dot(u, p) for p in points]
        value = Fraction((max(values) - min(values)) ** 2, _dot(u, u))
        best = value if best is None else min(best, value)
    return best
