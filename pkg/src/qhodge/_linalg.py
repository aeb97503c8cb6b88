"""Dense exact Gaussian elimination over Q for the small systems used by
weight detection and Newton polyhedra."""

from __future__ import annotations

from fractions import Fraction


def rref(rows):
    """Reduced row echelon form; returns (matrix, pivot columns)."""
    m = [[Fraction(v) for v in row] for row in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                t = m[i][c]
                m[i] = [a - t * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows) -> int:
    return len(rref(rows)[1])


class Inconsistent(ValueError):
    pass


class Underdetermined(ValueError):
    pass


def solve(A, b):
    """Unique solution x of A x = b.

    Raises :class:`Inconsistent` or :class:`Underdetermined` otherwise.
    """
    if not A:
        raise Underdetermined("empty system")
    n = len(A[0])
    aug = [list(row) + [bi] for row, bi in zip(A, b)]
    m, pivots = rref(aug)
    if n in pivots:
        raise Inconsistent("system has no solution")
    if len(pivots) < n:
        raise Underdetermined("system has infinitely many solutions")
    x = [Fraction(0)] * n
    for row, c in zip(m, pivots):
        x[c] = row[n]
    return x


def nullspace(rows, ncols: int):
    """Basis of {x : rows * x = 0}."""
    if not rows:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    m, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for row, pc in zip(m, pivots):
            v[pc] = -row[fc]
        basis.append(v)
    return basis
