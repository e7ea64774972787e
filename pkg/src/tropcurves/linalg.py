"""Exact rational linear algebra: rank, nullspace, and a small simplex.

Matrices are lists of lists of `Fraction`.  The simplex implementation uses
Bland's rule, so it terminates on every input; it is only ever applied to
desk-scale systems (tens of variables).
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

Matrix = List[List[Fraction]]


def rref(m: Matrix) -> Tuple[Matrix, List[int]]:
    """Reduced row echelon form and pivot column indices."""
    a = [row[:] for row in m]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    pivots: List[int] = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        pv = a[r][c]
        a[r] = [x / pv for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return a, pivots


def rank(m: Matrix) -> int:
    if not m:
        return 0
    return len(rref(m)[1])


def nullspace(m: Matrix) -> List[List[Fraction]]:
    """Basis of the solution space of m x = 0."""
    if not m:
        return []
    cols = len(m[0])
    red, pivots = rref(m)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * cols
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -red[i][fc]
        basis.append(v)
    return basis


def simplex_max(
    c: Sequence[Fraction], a: Matrix, b: Sequence[Fraction]
) -> Optional[Tuple[Fraction, List[Fraction]]]:
    """Maximize c.x subject to a x = b, x >= 0 (two-phase, Bland's rule).

    Returns (optimal value, x) or None when infeasible; raises on unbounded.
    """
    m = len(a)
    n = len(c)
    # normalize b >= 0
    rows = [list(map(Fraction, row)) for row in a]
    rhs = list(map(Fraction, b))
    for i in range(m):
        if rhs[i] < 0:
            rows[i] = [-x for x in rows[i]]
            rhs[i] = -rhs[i]

    # phase 1: artificial variables
    tab = [rows[i] + [Fraction(1 if j == i else 0) for j in range(m)] + [rhs[i]] for i in range(m)]
    basis = [n + i for i in range(m)]
    cost1 = [Fraction(0)] * n + [Fraction(-1)] * m
    val = _run_simplex(tab, basis, cost1, n + m)
    if val < 0:
        return None
    # drive artificials out of the basis where possible
    for i in range(m):
        if basis[i] >= n:
            piv = next((j for j in range(n) if tab[i][j] != 0), None)
            if piv is not None:
                _pivot(tab, basis, i, piv)
    # drop artificial columns (rows with artificial basis are zero rows)
    keep = [i for i in range(m) if basis[i] < n]
    tab = [[tab[i][j] for j in range(n)] + [tab[i][-1]] for i in keep]
    basis = [basis[i] for i in keep]
    cost2 = list(map(Fraction, c))
    _run_simplex(tab, basis, cost2, n)
    x = [Fraction(0)] * n
    for i, bi in enumerate(basis):
        x[bi] = tab[i][-1]
    value = sum(ci * xi for ci, xi in zip(c, x))
    return value, x


def _pivot(tab, basis, row, col):
    pv = tab[row][col]
    tab[row] = [x / pv for x in tab[row]]
    for i in range(len(tab)):
        if i != row and tab[i][col] != 0:
            f = tab[i][col]
            tab[i] = [x - f * y for x, y in zip(tab[i], tab[row])]
    basis[row] = col


def _run_simplex(tab, basis, cost, ncols) -> Fraction:
    while True:
        # reduced costs via basis cost vector
        z = [Fraction(0)] * (ncols + 1)
        for i, bi in enumerate(basis):
            if cost[bi] != 0:
                for j in range(ncols + 1):
                    z[j] += cost[bi] * tab[i][j]
        entering = None
        for j in range(ncols):  # Bland: smallest index with positive reduced cost
            if cost[j] - z[j] > 0:
                entering = j
                break
        if entering is None:
            return z[ncols]
        leaving = None
        best = None
        for i in range(len(tab)):
            if tab[i][entering] > 0:
                ratio = tab[i][-1] / tab[i][entering]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leaving]):
                    best = ratio
                    leaving = i
        if leaving is None:
            raise ArithmeticError("unbounded linear program")
        _pivot(tab, basis, leaving, entering)
