"""Closed-form generating functions driven by the intersection lattice.

Each flat of codimension c with Möbius value m contributes the grid of
(-1)^c * m * t^c * (1-s)^(c-ell) * (1-t)^(-c); summing over flats gives the
bigraded dimension series.  All expansions are exact integer binomial grids;
no rational-function normal forms are ever needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .polynomials import SeriesGrid, UniPoly, binomial_series_coeffs


def poincare_polynomial(lattice) -> UniPoly:
    """Sum over flats of mu(X) * (-t)^codim(X)."""
    coeffs = [0] * (lattice.ell + 1)
    for flat, mu in zip(lattice.flats, lattice.mu):
        c = flat.codim
        coeffs[c] += mu * (-1) ** c
    return UniPoly(coeffs)


def flat_term_grid(ell, codim, mu, max_p, max_q):
    """Grid contributed by a single flat (see module docstring)."""
    weight = (-1) ** codim * mu
    srow = binomial_series_coeffs(ell - codim, "-", max_p)
    tcol = binomial_series_coeffs(codim, "-", max_q)
    grid = [[0] * (max_q + 1) for _ in range(max_p + 1)]
    for p in range(max_p + 1):
        wp = weight * srow[p]
        if not wp:
            continue
        for q in range(codim, max_q + 1):
            grid[p][q] = wp * tcol[q - codim]
    return grid


def bigraded_series(lattice, max_p, max_q) -> SeriesGrid:
    """Dimension grid of the doubly graded space, truncated inclusively.

    Entry (p, q) is the number of independent classes of fractions with
    numerator degree exactly p and denominator degree exactly q, modulo
    everything expressible with a smaller numerator or denominator degree.
    """
    out = SeriesGrid(max_p, max_q)
    for flat, mu in zip(lattice.flats, lattice.mu):
        term = flat_term_grid(lattice.ell, flat.codim, mu, max_p, max_q)
        for p in range(max_p + 1):
            row = out.coeffs[p]
            trow = term[p]
            for q in range(max_q + 1):
                row[q] += trow[q]
    return out


def cumulative_series(lattice, max_p, max_q) -> SeriesGrid:
    """Grid of the full filtration-cell dimensions.

    Computed from the product form with the extra 1/((1-s)(1-t)) factor; it
    must equal the 2-D partial-sum transform of ``bigraded_series``.
    """
    ell = lattice.ell
    out = SeriesGrid(max_p, max_q)
    for flat, mu in zip(lattice.flats, lattice.mu):
        c = flat.codim
        weight = (-1) ** c * mu
        srow = binomial_series_coeffs(ell + 1 - c, "-", max_p)
        tcol = binomial_series_coeffs(c + 1, "-", max_q)
        for p in range(max_p + 1):
            wp = weight * srow[p]
            if not wp:
                continue
            row = out.coeffs[p]
            for q in range(c, max_q + 1):
                row[q] += wp * tcol[q - c]
    return out


def poincare_from_exponents(exponents) -> UniPoly:
    """Product of (1 + d t) over the exponents."""
    out = UniPoly([1])
    for d in exponents:
        out = out * UniPoly([1, d])
    return out


def _grid_mul(a, b, max_p, max_q):
    out = [[0] * (max_q + 1) for _ in range(max_p + 1)]
    for p in range(max_p + 1):
        for q in range(max_q + 1):
            if not a[p][q]:
                continue
            apq = a[p][q]
            for i in range(max_p + 1 - p):
                brow = b[i]
                orow = out[p + i]
                for j in range(max_q + 1 - q):
                    if brow[j]:
                        orow[q + j] += apq * brow[j]
    return out


def series_from_exponents(exponents, max_p, max_q) -> SeriesGrid:
    """Expansion of (1-s)^-ell (1-t)^-ell prod_i (1 + (d_i - 1)t - d_i s t)."""
    ell = len(exponents)
    grid = [[0] * (max_q + 1) for _ in range(max_p + 1)]
    grid[0][0] = 1
    for d in exponents:
        factor = [[0] * (max_q + 1) for _ in range(max_p + 1)]
        factor[0][0] = 1
        if max_q >= 1:
            factor[0][1] = d - 1
            if max_p >= 1:
                factor[1][1] = -d
        grid = _grid_mul(grid, factor, max_p, max_q)
    srow = binomial_series_coeffs(ell, "-", max_p)
    tcol = binomial_series_coeffs(ell, "-", max_q)
    sgrid = [[srow[p] if q == 0 else 0 for q in range(max_q + 1)]
             for p in range(max_p + 1)]
    tgrid = [[tcol[q] if p == 0 else 0 for q in range(max_q + 1)]
             for p in range(max_p + 1)]
    grid = _grid_mul(grid, sgrid, max_p, max_q)
    grid = _grid_mul(grid, tgrid, max_p, max_q)
    return SeriesGrid(max_p, max_q, grid)


def _divide_linear(asc_coeffs, d):
    """Divide a polynomial (ascending int coeffs) by (u + d).

    Returns (ascending quotient coefficients, remainder).
    """
    desc = list(reversed(asc_coeffs))
    quot = []
    acc = 0
    for c in desc:
        acc = c + (-d) * acc if quot else c
        quot.append(acc)
    rem = quot.pop()
    return list(reversed(quot)), rem


def try_factor_exponents(poly: UniPoly, ell):
    """Nonnegative d_1 <= ... <= d_ell with prod(1 + d_i t) == poly.

    Reverses the polynomial into a monic integer polynomial whose roots are
    the negated nonzero exponents, then strips integer roots by trial
    division over divisors of the constant term.  Returns None when no such
    exponents exist; the result is padded with zeros up to length ell.
    """
    if poly.coefficient(0) != 1:
        return None
    m = poly.degree
    if m > ell:
        return None
    if m == 0:
        return (0,) * ell
    rev = list(reversed(list(poly.coeffs)))
    ds = []
    while len(rev) > 1:
        const = rev[0]
        if const <= 0:
            return None
        for d in range(1, const + 1):
            if const % d:
                continue
            quot, rem = _divide_linear(rev, d)
            if rem == 0:
                ds.append(d)
                rev = quot
                break
        else:
            return None
    if rev != [1]:
        return None
    ds.sort()
    return (0,) * (ell - len(ds)) + tuple(ds)


@dataclass(frozen=True)
class FlatSeriesRow:
    """Per-flat dimensions of the pure-reciprocal spans, by denominator size."""

    flat_index: int
    codim: int
    mu: int
    dims: tuple[int, ...]


def reciprocal_dims_by_flat(lattice, max_q):
    """Closed-form dimensions of the reciprocal span attached to each flat.

    A flat of codimension c >= 1 carries (-1)^c * mu * C(q-1, c-1) in
    denominator size q; the ambient space carries the constants only.
    """
    rows = []
    for i, (flat, mu) in enumerate(zip(lattice.flats, lattice.mu)):
        c = flat.codim
        dims = [0] * (max_q + 1)
        if c == 0:
            dims[0] = 1
        else:
            weight = (-1) ** c * mu
            for q in range(c, max_q + 1):
                dims[q] = weight * comb(q - 1, c - 1)
        rows.append(FlatSeriesRow(i, c, mu, tuple(dims)))
    return rows


def reciprocal_dims_total(lattice, max_q):
    """Dimensions of the full pure-reciprocal span by denominator size.

    Equals the p=0 column of ``bigraded_series``.
    """
    total = [0] * (max_q + 1)
    for row in reciprocal_dims_by_flat(lattice, max_q):
        for q, v in enumerate(row.dims):
            total[q] += v
    return total
