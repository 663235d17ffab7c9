"""Exact rank, reduced echelon and solve routines over the rationals.

Rank computations hand primitive integer rows to the kernel backend; the
reduced row-echelon form and the span solver work directly in Fractions
(their inputs are small).  Everything allocates private workspaces, so all
functions are safe to call from concurrent readers.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from .kernel import RowBasis


def to_integer_row(row):
    """Scale a row of rationals to a primitive integer row (same span)."""
    if all(isinstance(x, int) for x in row):
        ints = list(row)
    else:
        fracs = [Fraction(x) for x in row]
        den = 1
        for x in fracs:
            den = lcm(den, x.denominator)
        ints = [int(x * den) for x in fracs]
    g = 0
    for v in ints:
        g = gcd(g, v)
        if g == 1:
            return ints
    if g > 1:
        ints = [v // g for v in ints]
    return ints


def rank(rows):
    """Rank over the rationals, exact."""
    rows = list(rows)
    if not rows:
        return 0
    basis = RowBasis(len(rows[0]))
    for row in rows:
        basis.add(to_integer_row(row))
    return basis.rank


def rref(rows):
    """Canonical reduced row-echelon form.

    Returns ``(echelon_rows, pivot_columns)`` where the echelon rows are
    tuples of Fractions with pivot entries 1, zero rows dropped.  The result
    depends only on the row space, so it doubles as a normal form.
    """
    mat = [[Fraction(x) for x in row] for row in rows]
    nrows = len(mat)
    ncols = len(mat[0]) if mat else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, nrows) if mat[i][c]), None)
        if pr is None:
            continue
        mat[r], mat[pr] = mat[pr], mat[r]
        inv = Fraction(1) / mat[r][c]
        mat[r] = [v * inv for v in mat[r]]
        prow = mat[r]
        for i in range(nrows):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], prow)]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return tuple(tuple(mat[i]) for i in range(r)), tuple(pivots)


def solve_in_span(target, rows):
    """Coefficients c with sum(c[k] * rows[k]) == target, or None.

    The distinguished solution comes from back-substitution on the reduced
    echelon form of the transposed system with free variables set to zero;
    in particular redundant rows late in the list get coefficient 0.
    """
    rows = [list(r) for r in rows]
    target = [Fraction(x) for x in target]
    m = len(rows)
    n = len(target)
    for r in rows:
        if len(r) != n:
            raise ValueError("row length does not match target length")
    if m == 0:
        return [] if not any(target) else None
    # one equation per coordinate: sum_k c_k rows[k][i] = target[i]
    aug = [[Fraction(rows[k][i]) for k in range(m)] + [target[i]]
           for i in range(n)]
    pivots = []
    r = 0
    for c in range(m):
        pr = next((i for i in range(r, n) if aug[i][c]), None)
        if pr is None:
            continue
        aug[r], aug[pr] = aug[pr], aug[r]
        inv = Fraction(1) / aug[r][c]
        aug[r] = [v * inv for v in aug[r]]
        prow = aug[r]
        for i in range(n):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], prow)]
        pivots.append(c)
        r += 1
        if r == n:
            break
    for i in range(r, n):
        if aug[i][m]:
            return None
    sol = [Fraction(0)] * m
    for idx, c in enumerate(pivots):
        sol[c] = aug[idx][m]
    return sol
