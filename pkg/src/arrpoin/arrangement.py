"""Arrangement input types: canonically scaled linear forms, validated form
lists, and the built-in families."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .errors import InputError, ProportionalPairError, ZeroFormError
from .polynomials import Poly


@dataclass(frozen=True)
class LinearForm:
    """Nonzero linear form, scaled so the first nonzero coefficient is 1.

    The canonical scaling makes proportionality a plain equality test.
    """

    coeffs: tuple[Fraction, ...]

    @classmethod
    def from_vector(cls, vec, position=None):
        coeffs = tuple(Fraction(x) for x in vec)
        lead = next((c for c in coeffs if c), None)
        if lead is None:
            where = f"form {position} " if position is not None else ""
            raise ZeroFormError(f"{where}is the zero form")
        return cls(tuple(c / lead for c in coeffs))

    @property
    def ell(self):
        return len(self.coeffs)

    def poly(self):
        return Poly.linear(self.coeffs)

    def integer_coeffs(self):
        """Primitive integer rescaling (for span-only computations)."""
        den = 1
        for c in self.coeffs:
            den = lcm(den, c.denominator)
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for v in ints:
            g = gcd(g, v)
        if g > 1:
            ints = [v // g for v in ints]
        return tuple(ints)

    def __str__(self):
        return str(self.poly())


@dataclass(frozen=True)
class Arrangement:
    """Ambient dimension plus an ordered list of pairwise non-proportional
    forms.  The empty arrangement is legal."""

    ell: int
    forms: tuple[LinearForm, ...]

    def __post_init__(self):
        for form in self.forms:
            if form.ell != self.ell:
                raise InputError(
                    f"form {form} has {form.ell} coefficients, expected {self.ell}")

    def __len__(self):
        return len(self.forms)


def build_arrangement(raw_forms, ell):
    """Validate and canonicalize raw coefficient vectors.

    Zero vectors and proportional pairs are rejected (never silently
    deduplicated); diagnostics carry 1-based form indices.
    """
    if ell < 0:
        raise InputError("ambient dimension must be nonnegative")
    forms = []
    for i, raw in enumerate(raw_forms, start=1):
        raw = list(raw)
        if len(raw) != ell:
            raise InputError(
                f"form {i} has {len(raw)} coefficients, expected {ell}")
        forms.append(LinearForm.from_vector(raw, position=i))
    seen = {}
    for i, form in enumerate(forms, start=1):
        j = seen.setdefault(form.coeffs, i)
        if j != i:
            raise ProportionalPairError(
                f"forms {j} and {i} are proportional")
    return Arrangement(ell, tuple(forms))


def braid_arrangement(ell):
    """All difference forms x_i - x_j for i < j (lexicographic pair order)."""
    vecs = []
    for i in range(ell):
        for j in range(i + 1, ell):
            vec = [0] * ell
            vec[i] = 1
            vec[j] = -1
            vecs.append(vec)
    return build_arrangement(vecs, ell)


def boolean_arrangement(ell):
    """The coordinate forms x_1, ..., x_ell."""
    vecs = []
    for i in range(ell):
        vec = [0] * ell
        vec[i] = 1
        vecs.append(vec)
    return build_arrangement(vecs, ell)


FAMILIES = {
    "braid": "difference forms x_i - x_j for i < j; exponents 0..ell-1 attached",
    "boolean": "coordinate forms x_1, ..., x_ell",
}


def family(name, ell):
    """Build a named family; returns ``(arrangement, exponents_or_None)``."""
    if ell < 1:
        raise InputError("ell must be >= 1")
    if name == "braid":
        return braid_arrangement(ell), tuple(range(ell))
    if name == "boolean":
        return boolean_arrangement(ell), None
    raise InputError(f"unknown family {name!r} (known: {', '.join(sorted(FAMILIES))})")
