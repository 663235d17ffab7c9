"""Exact polynomial and series primitives.

Sparse multivariate polynomials over the rationals, dense one-variable
integer polynomials, and truncated bivariate integer series grids.  The
graded-lexicographic monomial order (total degree first, then x1 > x2 > ...)
fixes every matrix column order in the package, which makes ranks, echelon
forms and greedy basis choices reproducible between runs and backends.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb


def grlex_key(mono):
    """Sort key realizing the graded-lexicographic order, ascending."""
    return (sum(mono), tuple(-e for e in mono))


def monomials_of_degree(nvars, degree):
    """Yield exponent tuples of the given total degree, grlex order."""
    if nvars == 0:
        if degree == 0:
            yield ()
        return
    if nvars == 1:
        yield (degree,)
        return
    for head in range(degree, -1, -1):
        for tail in monomials_of_degree(nvars - 1, degree - head):
            yield (head,) + tail


def monomials_upto(nvars, max_degree):
    """All exponent tuples of total degree <= max_degree, grlex-ascending."""
    out = []
    for d in range(max_degree + 1):
        out.extend(monomials_of_degree(nvars, d))
    return out


def count_monomials_upto(nvars, max_degree):
    return comb(max_degree + nvars, nvars)


def homogeneous_dim(degree, nvars):
    """Dimension of the space of homogeneous polynomials of one degree.

    For zero variables the only polynomials are constants, so the dimension
    is 1 in degree 0 and 0 otherwise.
    """
    if degree < 0:
        return 0
    if nvars == 0:
        return 1 if degree == 0 else 0
    return comb(degree + nvars - 1, nvars - 1)


def binomial_series_coeffs(c, sign, order):
    """Coefficients of (1-u)^(+c) resp. (1-u)^(-c) up to and including u^order.

    For the negative power the k-th coefficient is C(k+c-1, c-1); the positive
    power is the finite alternating binomial row.
    """
    if c < 0:
        raise ValueError("exponent magnitude must be nonnegative")
    if sign == "-":
        if c == 0:
            return [1] + [0] * order
        return [comb(k + c - 1, c - 1) for k in range(order + 1)]
    if sign == "+":
        return [(-1) ** k * comb(c, k) for k in range(order + 1)]
    raise ValueError("sign must be '+' or '-'")


def _coeff_str(coeff):
    return str(coeff)


class Poly:
    """Sparse polynomial in ``nvars`` variables with Fraction coefficients.

    Terms map exponent tuples to nonzero coefficients; zero coefficients are
    never stored.  Instances are treated as immutable after construction.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        clean = {}
        for mono, coeff in (terms or {}).items():
            mono = tuple(mono)
            if len(mono) != nvars:
                raise ValueError(
                    f"monomial {mono} has {len(mono)} exponents, expected {nvars}")
            coeff = Fraction(coeff)
            if coeff:
                clean[mono] = coeff
        self.terms = clean

    @classmethod
    def zero(cls, nvars):
        return cls(nvars)

    @classmethod
    def constant(cls, nvars, value):
        return cls(nvars, {(0,) * nvars: Fraction(value)})

    @classmethod
    def variable(cls, nvars, index):
        """The variable x_{index+1} (0-based index)."""
        mono = tuple(1 if i == index else 0 for i in range(nvars))
        return cls(nvars, {mono: Fraction(1)})

    @classmethod
    def linear(cls, coeffs):
        """The linear form with the given coefficient vector."""
        coeffs = list(coeffs)
        n = len(coeffs)
        terms = {}
        for i, c in enumerate(coeffs):
            if c:
                mono = tuple(1 if j == i else 0 for j in range(n))
                terms[mono] = Fraction(c)
        return cls(n, terms)

    def is_zero(self):
        return not self.terms

    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self.terms), default=-1)

    def _check(self, other):
        if self.nvars != other.nvars:
            raise ValueError(
                f"dimension mismatch: {self.nvars} vs {other.nvars} variables")

    def __add__(self, other):
        if not isinstance(other, Poly):
            other = Poly.constant(self.nvars, other)
        self._check(other)
        terms = dict(self.terms)
        for mono, coeff in other.terms.items():
            terms[mono] = terms.get(mono, 0) + coeff
        return Poly(self.nvars, terms)

    def __sub__(self, other):
        return self + (-other if isinstance(other, Poly) else Poly.constant(self.nvars, -Fraction(other)))

    def __neg__(self):
        return Poly(self.nvars, {m: -c for m, c in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return self.scale(other)
        self._check(other)
        terms = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = tuple(a + b for a, b in zip(m1, m2))
                terms[mono] = terms.get(mono, 0) + c1 * c2
        return Poly(self.nvars, terms)

    __rmul__ = __mul__

    def scale(self, scalar):
        scalar = Fraction(scalar)
        return Poly(self.nvars, {m: c * scalar for m, c in self.terms.items()})

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        out = Poly.constant(self.nvars, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def shift(self, mono):
        """Multiply by a single monomial (exponent tuple)."""
        return Poly(self.nvars,
                    {tuple(a + b for a, b in zip(m, mono)): c
                     for m, c in self.terms.items()})

    def coeff_vector(self, index):
        """Dense coefficient list over a monomial -> position map."""
        row = [Fraction(0)] * len(index)
        for mono, coeff in self.terms.items():
            row[index[mono]] = coeff
        return row

    def __eq__(self, other):
        return (isinstance(other, Poly) and self.nvars == other.nvars
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __repr__(self):
        return f"Poly({self.nvars}, {self.terms!r})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for mono in sorted(self.terms,
                           key=lambda m: (-sum(m), tuple(-e for e in m))):
            coeff = self.terms[mono]
            factors = [f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}"
                       for i, e in enumerate(mono) if e]
            mag = abs(coeff)
            if not factors:
                body = _coeff_str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = _coeff_str(mag) + "*" + "*".join(factors)
            if not parts:
                parts.append(body if coeff > 0 else "-" + body)
            else:
                parts.append(("+ " if coeff > 0 else "- ") + body)
        return " ".join(parts)


class UniPoly:
    """Dense one-variable polynomial with integer coefficients, ascending.

    The zero polynomial has an empty coefficient tuple; otherwise the leading
    coefficient is nonzero.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        coeffs = [int(c) for c in coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def coefficient(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly([self.coefficient(k) + other.coefficient(k) for k in range(n)])

    def __mul__(self, other):
        if not self.coeffs or not other.coeffs:
            return UniPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPoly(out)

    def __eq__(self, other):
        return isinstance(other, UniPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"UniPoly({list(self.coeffs)!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                body = str(abs(c))
            elif k == 1:
                body = f"{abs(c)} t"
            else:
                body = f"{abs(c)} t^{k}"
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)


class SeriesGrid:
    """Truncated series in two variables: ``coeffs[p][q]`` is the (s^p t^q)
    coefficient.  Bounds are inclusive; entries are exact integers."""

    __slots__ = ("max_p", "max_q", "coeffs")

    def __init__(self, max_p, max_q, coeffs=None):
        if max_p < 0 or max_q < 0:
            raise ValueError("truncation bounds must be nonnegative")
        self.max_p = max_p
        self.max_q = max_q
        if coeffs is None:
            coeffs = [[0] * (max_q + 1) for _ in range(max_p + 1)]
        else:
            coeffs = [list(row) for row in coeffs]
            if len(coeffs) != max_p + 1 or any(len(r) != max_q + 1 for r in coeffs):
                raise ValueError("coefficient grid does not match bounds")
        self.coeffs = coeffs

    def entry(self, p, q):
        return self.coeffs[p][q]

    def row(self, p):
        return list(self.coeffs[p])

    def column(self, q):
        return [self.coeffs[p][q] for p in range(self.max_p + 1)]

    def partial_sums(self):
        """Grid of sums over the lower-left rectangle (a <= p, b <= q)."""
        out = SeriesGrid(self.max_p, self.max_q)
        for p in range(self.max_p + 1):
            acc = 0
            for q in range(self.max_q + 1):
                acc += self.coeffs[p][q]
                above = out.coeffs[p - 1][q] if p > 0 else 0
                out.coeffs[p][q] = acc + above
        return out

    def __eq__(self, other):
        return (isinstance(other, SeriesGrid) and self.max_p == other.max_p
                and self.max_q == other.max_q and self.coeffs == other.coeffs)

    def __repr__(self):
        return f"SeriesGrid({self.max_p}, {self.max_q}, {self.coeffs!r})"
