"""Brute-force ground truth for the filtration dimensions.

A cell (p, q) is spanned by the fractions monomial / product-of-forms with
numerator degree <= p and denominator size <= q.  Clearing every generator by
the common denominator (product of all forms)^q is injective, so the cell
dimension equals the rank of an integer coefficient matrix over the shared
graded-lex monomial basis.  Everything downstream (graded dimensions,
per-flat splitting, explicit bases, coordinates of a given fraction) reduces
to such ranks plus one exact solve.

Tuples of denominator forms are stored as multisets of form indices: only
the product and the common zero set of a tuple matter for any span, and
multisets shrink the enumeration by the factorial of the size.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement

from .arrangement import Arrangement
from .errors import BasisNotIndependentError, InputError, NotInCellError
from .kernel import RowBasis
from .lattice import IntersectionLattice, compute_lattice
from .linalg import rref, solve_in_span, to_integer_row
from .polynomials import (Poly, homogeneous_dim, monomials_of_degree,
                          monomials_upto)


@dataclass(frozen=True)
class FractionGenerator:
    """numerator / prod(forms[i] for i in denominator).

    The denominator is an ascending multiset of form indices; an empty tuple
    means denominator 1.
    """

    numerator: Poly
    denominator: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "denominator",
                           tuple(sorted(self.denominator)))


@dataclass(frozen=True)
class FlatDimRow:
    """One flat's contribution to a graded cell: polynomial functions on the
    flat times the reciprocal span attached to the flat."""

    flat_index: int
    codim: int
    poly_dim: int
    reciprocal_dim: int
    contribution: int


@dataclass
class DimTable:
    """Memoized grid of filtration and graded dimensions.

    ``graded`` is the 2-D finite difference of ``filtration`` (with zeros at
    negative indices), so the partial sums of the graded grid reproduce the
    filtration grid exactly.
    """

    max_p: int
    max_q: int
    filtration: list = field(default_factory=list)
    graded: list = field(default_factory=list)
    provenance: str = "oracle"

    def dim_filtration(self, p, q):
        return self.filtration[p][q]

    def dim_graded(self, p, q):
        return self.graded[p][q]


class FiltrationOracle:
    """Exact rank computations for one arrangement.

    Results are cached per instance; caches are write-once per key, so a
    finished oracle can be shared across concurrent readers.
    """

    def __init__(self, arrangement: Arrangement,
                 lattice: IntersectionLattice | None = None):
        self.arrangement = arrangement
        self.lattice = lattice if lattice is not None else compute_lattice(arrangement)
        ints = [form.integer_coeffs() for form in arrangement.forms]
        self._int_forms = [Poly.linear(v) for v in ints]
        self._frac_forms = [form.poly() for form in arrangement.forms]
        self._dim_cache = {}
        self._recip_cache = {}
        self._power_cache = {}
        self._base_cache = {}
        self._mono_cache = {}
        self._flat_of_set = {}

    # -- enumeration ------------------------------------------------------

    def denominators(self, q):
        """All denominator multisets of size <= q (size ascending, then
        lexicographic)."""
        n = len(self.arrangement.forms)
        out = []
        for b in range(q + 1):
            out.extend(combinations_with_replacement(range(n), b))
        return out

    def generators(self, p, q):
        """All spanning fractions of the cell, in the deterministic order
        (denominator size, denominator multiset, numerator monomial)."""
        ell = self.arrangement.ell
        out = []
        for denom in self.denominators(q):
            for mono in monomials_upto(ell, p):
                out.append(FractionGenerator(_monomial_poly(ell, mono), denom))
        return out

    # -- cleared rows ------------------------------------------------------

    def _monomials(self, max_degree):
        cached = self._mono_cache.get(max_degree)
        if cached is None:
            monos = monomials_upto(self.arrangement.ell, max_degree)
            cached = (monos, {m: i for i, m in enumerate(monos)})
            self._mono_cache[max_degree] = cached
        return cached

    def _int_form_power(self, i, k):
        key = (i, k)
        cached = self._power_cache.get(key)
        if cached is None:
            cached = self._int_forms[i] ** k
            self._power_cache[key] = cached
        return cached

    def _cleared_base(self, denom, q):
        """(product of all integer forms)^q / prod(denom), as a polynomial."""
        key = (q, denom)
        cached = self._base_cache.get(key)
        if cached is None:
            counts = Counter(denom)
            cached = Poly.constant(self.arrangement.ell, 1)
            for i in range(len(self.arrangement.forms)):
                k = q - counts.get(i, 0)
                if k:
                    cached = cached * self._int_form_power(i, k)
            self._base_cache[key] = cached
        return cached

    def _int_row(self, base, mono, index, ncols):
        row = [0] * ncols
        for m, coeff in base.terms.items():
            shifted = tuple(a + b for a, b in zip(m, mono))
            row[index[shifted]] = int(coeff)
        return row

    def _cleared_frac(self, gen: FractionGenerator, q, index, ncols):
        """Cleared form of a generator using the canonical (fraction) forms;
        preserves true coordinates for solving."""
        counts = Counter(gen.denominator)
        poly = gen.numerator
        for i, form in enumerate(self._frac_forms):
            k = q - counts.get(i, 0)
            if k:
                poly = poly * form ** k
        row = [Fraction(0)] * ncols
        for m, coeff in poly.terms.items():
            row[index[m]] = coeff
        return row

    # -- dimensions --------------------------------------------------------

    def dim_filtration(self, p, q):
        """Dimension of the cell spanned by fractions with numerator degree
        <= p and denominator size <= q; zero at negative indices."""
        if p < 0 or q < 0:
            return 0
        key = (p, q)
        cached = self._dim_cache.get(key)
        if cached is not None:
            return cached
        ell = self.arrangement.ell
        n = len(self.arrangement.forms)
        monos, index = self._monomials(p + q * n)
        basis = RowBasis(len(monos))
        numerators = monomials_upto(ell, p)
        for denom in self.denominators(q):
            base = self._cleared_base(denom, q)
            for mono in numerators:
                basis.add(self._int_row(base, mono, index, len(monos)))
        self._dim_cache[key] = basis.rank
        return basis.rank

    def dim_graded(self, p, q):
        """Dimension of the graded quotient cell (2-D finite difference)."""
        if p < 0 or q < 0:
            return 0
        return (self.dim_filtration(p, q)
                - self.dim_filtration(p - 1, q)
                - self.dim_filtration(p, q - 1)
                + self.dim_filtration(p - 1, q - 1))

    def dim_table(self, max_p, max_q) -> DimTable:
        filtration = [[self.dim_filtration(p, q) for q in range(max_q + 1)]
                      for p in range(max_p + 1)]
        graded = [[self.dim_graded(p, q) for q in range(max_q + 1)]
                  for p in range(max_p + 1)]
        return DimTable(max_p, max_q, filtration, graded)

    # -- per-flat machinery -------------------------------------------------

    def _flat_of_denominator(self, denom):
        distinct = tuple(sorted(set(denom)))
        cached = self._flat_of_set.get(distinct)
        if cached is None:
            rows = [self.arrangement.forms[i].coeffs for i in distinct]
            key, _ = rref(rows)
            cached = self.lattice.index_of[key]
            self._flat_of_set[distinct] = cached
        return cached

    def _reciprocal_dims(self, q):
        """Rank of the cleared pure reciprocals of denominator size exactly
        q, grouped by the flat cut out by the denominator."""
        cached = self._recip_cache.get(q)
        if cached is not None:
            return cached
        ell = self.arrangement.ell
        n = len(self.arrangement.forms)
        rows_by_flat = {}
        for denom in combinations_with_replacement(range(n), q):
            idx = self._flat_of_denominator(denom)
            rows_by_flat.setdefault(idx, []).append(self._cleared_base(denom, q))
        degree = q * n - q  # cleared reciprocals are homogeneous of this degree
        monos = list(monomials_of_degree(ell, degree))
        index = {m: i for i, m in enumerate(monos)}
        dims = {}
        for idx, polys in rows_by_flat.items():
            basis = RowBasis(len(monos))
            for poly in polys:
                row = [0] * len(monos)
                for m, coeff in poly.terms.items():
                    row[index[m]] = int(coeff)
                basis.add(row)
            dims[idx] = basis.rank
        self._recip_cache[q] = dims
        return dims

    def reciprocal_dim(self, q, flat_index):
        """dim of the span of 1/prod(tuple) over size-q tuples cutting out
        the given flat, by exact rank."""
        if q < 0:
            return 0
        return self._reciprocal_dims(q).get(flat_index, 0)

    def graded_dims_by_flat(self, p, q):
        """Split a graded cell across flats: polynomial-function dimension on
        the flat times the reciprocal dimension at the flat."""
        rows = []
        for i, flat in enumerate(self.lattice.flats):
            pd = homogeneous_dim(p, flat.dim)
            rd = self.reciprocal_dim(q, i)
            rows.append(FlatDimRow(i, flat.codim, pd, rd, pd * rd))
        return rows

    # -- explicit bases and coordinates --------------------------------------

    def _seed_lower(self, p, q, index, ncols):
        """Row basis spanning the cleared union of the two lower cells."""
        ell = self.arrangement.ell
        basis = RowBasis(ncols)
        for denom in self.denominators(q):
            top = p - 1 if len(denom) == q else p
            if top < 0:
                continue
            base = self._cleared_base(denom, q)
            for mono in monomials_upto(ell, top):
                basis.add(self._int_row(base, mono, index, ncols))
        return basis

    def graded_basis(self, p, q):
        """Greedy basis of a graded cell.

        Walks the generators with numerator degree exactly p and denominator
        size exactly q in the deterministic order and keeps those whose
        cleared form extends a basis of the cleared lower cells; the result
        has exactly the graded dimension.
        """
        if p < 0 or q < 0:
            return []
        ell = self.arrangement.ell
        n = len(self.arrangement.forms)
        monos, index = self._monomials(p + q * n)
        basis = self._seed_lower(p, q, index, len(monos))
        out = []
        for denom in combinations_with_replacement(range(n), q):
            base = self._cleared_base(denom, q)
            for mono in monomials_of_degree(ell, p):
                if basis.add(self._int_row(base, mono, index, len(monos))):
                    out.append(FractionGenerator(_monomial_poly(ell, mono), denom))
        assert len(out) == self.dim_graded(p, q), \
            "greedy basis size disagrees with the graded dimension"
        return out

    def decompose(self, element, p, q, basis):
        """Coordinates of ``element`` relative to ``basis`` modulo the two
        lower filtration cells.

        ``element`` is a FractionGenerator or an iterable of
        (coefficient, FractionGenerator) pairs (a formal sum).  The basis
        classes must be independent modulo the lower cells (checked by rank
        first); the returned rationals c_i are then the unique ones with
        element - sum(c_i * basis_i) in the lower cells.
        """
        if isinstance(element, FractionGenerator):
            terms = [(Fraction(1), element)]
        else:
            terms = [(Fraction(c), g) for c, g in element]
        for _, gen in terms:
            self._validate_generator(gen, p, q)
        for gen in basis:
            self._validate_generator(gen, p, q)

        ell = self.arrangement.ell
        n = len(self.arrangement.forms)
        monos, index = self._monomials(p + q * n)
        ncols = len(monos)

        cleared_basis = [self._cleared_frac(g, q, index, ncols) for g in basis]
        seed = self._seed_lower(p, q, index, ncols)
        for k, row in enumerate(cleared_basis):
            if not seed.add(to_integer_row(row)):
                raise BasisNotIndependentError(
                    f"basis element {k + 1} is dependent on the lower cells "
                    "and the preceding basis elements")

        lower_rows = []
        for denom in self.denominators(q):
            top = p - 1 if len(denom) == q else p
            if top < 0:
                continue
            for mono in monomials_upto(ell, top):
                gen = FractionGenerator(_monomial_poly(ell, mono), denom)
                lower_rows.append(self._cleared_frac(gen, q, index, ncols))

        target = [Fraction(0)] * ncols
        for coeff, gen in terms:
            row = self._cleared_frac(gen, q, index, ncols)
            for i, v in enumerate(row):
                if v:
                    target[i] += coeff * v

        solution = solve_in_span(target, cleared_basis + lower_rows)
        if solution is None:
            raise NotInCellError(
                f"element is not in the cell (p={p}, q={q}); "
                "this indicates a bug, not bad input")
        return solution[:len(basis)]

    def _validate_generator(self, gen: FractionGenerator, p, q):
        if gen.numerator.nvars != self.arrangement.ell:
            raise InputError(
                f"numerator has {gen.numerator.nvars} variables, "
                f"expected {self.arrangement.ell}")
        if gen.numerator.degree() > p:
            raise InputError(
                f"numerator degree {gen.numerator.degree()} exceeds p={p}")
        if len(gen.denominator) > q:
            raise InputError(
                f"denominator size {len(gen.denominator)} exceeds q={q}")
        n = len(self.arrangement.forms)
        for i in gen.denominator:
            if not 0 <= i < n:
                raise InputError(f"denominator index {i} out of range")


def _monomial_poly(ell, mono):
    return Poly(ell, {tuple(mono): Fraction(1)})
