"""Intersection lattice of an arrangement.

A flat is the common zero set of a subset of forms, identified by the
canonical reduced row-echelon form of the span of those forms (a unique
normal form, so deduplication is a plain equality test).  Flats are ordered
by reverse inclusion of subspaces, equivalently by inclusion of the defining
row spaces.  The lattice is produced by a closure walk that adjoins one form
at a time, which reaches every intersection without enumerating all 2^n
subsets; the subset enumeration is kept only as a test oracle.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .arrangement import Arrangement
from .linalg import rank, rref


@dataclass(frozen=True)
class Flat:
    """A lattice element: canonical RREF of its defining forms.

    ``rref`` rows span the degree-1 part of the ideal of functions vanishing
    on the flat; the codimension is the number of rows.
    """

    ell: int
    rref: tuple[tuple[Fraction, ...], ...]

    @property
    def codim(self):
        return len(self.rref)

    @property
    def dim(self):
        return self.ell - len(self.rref)


def flat_leq(x: Flat, y: Flat) -> bool:
    """Lattice order: x <= y iff x contains y as a subspace.

    Decided by the rank test rank(rows(x) + rows(y)) == rank(rows(y)).
    """
    if x.ell != y.ell:
        raise ValueError("flats live in different ambient dimensions")
    if x.codim > y.codim:
        return False
    if x.codim == 0:
        return True
    return rank(list(x.rref) + list(y.rref)) == y.codim


class IntersectionLattice:
    """All flats of an arrangement, with order data and Möbius values.

    Flats are sorted by (codimension, lexicographic RREF entries), so the
    indexing, the Möbius vector and every downstream report are byte-stable.
    Index 0 is always the ambient space.  Instances are immutable once built.
    """

    def __init__(self, arrangement: Arrangement, flats, witnesses):
        self.arrangement = arrangement
        self.flats = tuple(flats)
        self.witnesses = tuple(witnesses)
        self.index_of = {f.rref: i for i, f in enumerate(self.flats)}
        self._below = self._order_closure()
        self.mu = self._moebius()

    @property
    def ell(self):
        return self.arrangement.ell

    def __len__(self):
        return len(self.flats)

    def leq(self, i, j):
        """Order test by flat index."""
        return i in self._below[j]

    def below(self, j):
        """Indices of all flats <= flat j (including j)."""
        return self._below[j]

    def _order_closure(self):
        below = []
        for j, fj in enumerate(self.flats):
            ids = set()
            for i, fi in enumerate(self.flats):
                if fi.codim > fj.codim:
                    break  # sorted by codim; nothing further can be below
                if i == j or flat_leq(fi, fj):
                    ids.add(i)
            below.append(frozenset(ids))
        return tuple(below)

    def _moebius(self):
        mu = [0] * len(self.flats)
        mu[0] = 1
        for j in range(1, len(self.flats)):
            mu[j] = -sum(mu[i] for i in self._below[j] if i != j)
        return tuple(mu)


def compute_lattice(arrangement: Arrangement) -> IntersectionLattice:
    """Enumerate all flats by closure from the ambient space.

    Starting from the empty RREF, repeatedly adjoin the canonical RREF of
    (flat rows + one form) until no new row space appears.  Each flat records
    a witness subset of form indices that generates it.
    """
    forms = arrangement.forms
    seen = {(): ()}
    queue = deque([()])
    while queue:
        key = queue.popleft()
        base = list(key)
        for i, form in enumerate(forms):
            new_key, _ = rref(base + [form.coeffs])
            if len(new_key) == len(key):
                continue  # form already vanishes on this flat
            if new_key not in seen:
                seen[new_key] = seen[key] + (i,)
                queue.append(new_key)
    order = sorted(seen, key=lambda k: (len(k), k))
    flats = [Flat(arrangement.ell, key) for key in order]
    witnesses = [seen[key] for key in order]
    return IntersectionLattice(arrangement, flats, witnesses)


def lattice_keys_by_enumeration(arrangement: Arrangement):
    """Row-space RREFs of every subset of forms (exponential; test oracle)."""
    forms = arrangement.forms
    keys = set()
    for r in range(len(forms) + 1):
        for subset in combinations(range(len(forms)), r):
            rows = [forms[i].coeffs for i in subset]
            keys.add(rref(rows)[0])
    return keys
