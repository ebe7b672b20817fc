"""Exact row reduction over Q for small dense matrices (lists of lists)."""

from fractions import Fraction


def _copy(rows):
    return [[Fraction(x) for x in row] for row in rows]


def rref(rows):
    """Return (reduced row echelon form, pivot columns)."""
    m = _copy(rows)
    if not m:
        return m, []
    ncols = len(m[0])
    pivots = []
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][col]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][col]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col]:
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows):
    return len(rref(rows)[1])


def solve(matrix, rhs):
    """Solve matrix @ x = rhs for a square nonsingular matrix."""
    n = len(matrix)
    aug = [list(row) + [v] for row, v in zip(matrix, rhs)]
    red, pivots = rref(aug)
    if pivots != list(range(n)):
        raise ValueError("matrix is singular")
    return [red[i][n] for i in range(n)]


def nullspace(rows, ncols=None):
    """Basis of the right kernel, one vector per free column."""
    if not rows:
        n = ncols or 0
        return [[Fraction(int(i == j)) for i in range(n)] for j in range(n)]
    red, pivots = rref(rows)
    n = len(rows[0])
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for row, p in zip(red, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def matmul(x, y):
    return [[sum((p * q for p, q in zip(row, col)), Fraction(0)) for col in zip(*y)] for row in x]


def transpose(x):
    return [list(c) for c in zip(*x)]
