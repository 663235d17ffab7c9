"""Pure-Python integer row-echelon kernel.

Rows are dense lists of Python ints.  An incoming row is reduced against the
stored echelon rows by fraction-free cross-multiplication (scaled by the gcd
of the two leading entries), with periodic content stripping so entries stay
small.  Stored rows are primitive with a positive leading entry, kept sorted
by pivot column, which makes the accumulated basis canonical for a given
insertion order.

``_rowred.pyx`` is the compiled twin; the two must stay behaviourally
identical (tests cross-check them on random input).
"""

from bisect import bisect_left
from math import gcd

BACKEND = "python"

_STRIP_EVERY = 8


def make_primitive(row):
    """In place: divide by the content, make the leading entry positive.

    Returns the index of the leading entry, or -1 for a zero row.
    """
    lead = -1
    g = 0
    for i, v in enumerate(row):
        if v:
            if lead < 0:
                lead = i
            g = gcd(g, v)
    if lead < 0:
        return -1
    if row[lead] < 0:
        g = -g
    if g != 1:
        for i in range(lead, len(row)):
            if row[i]:
                row[i] //= g
    return lead


def _strip_content(vec):
    g = 0
    for v in vec:
        g = gcd(g, v)
        if g == 1:
            return
    if g > 1:
        for i, v in enumerate(vec):
            if v:
                vec[i] = v // g


class RowBasis:
    """Incrementally accumulated echelon basis of an integer row space."""

    __slots__ = ("ncols", "rows", "pivots")

    def __init__(self, ncols):
        self.ncols = ncols
        self.rows = []
        self.pivots = []

    @property
    def rank(self):
        return len(self.rows)

    def reduce(self, row):
        """Reduce a copy of ``row`` against the basis.

        The result is an integer multiple of the true residual; it is all
        zeros exactly when ``row`` lies in the accumulated row space.
        """
        vec = list(row)
        if len(vec) != self.ncols:
            raise ValueError(f"row has {len(vec)} entries, expected {self.ncols}")
        steps = 0
        for i in range(len(self.rows)):
            j = self.pivots[i]
            b = vec[j]
            if not b:
                continue
            prow = self.rows[i]
            a = prow[j]
            g = gcd(a, b)
            am = a // g
            bm = b // g
            if am == 1:
                vec[j:] = [x - bm * y for x, y in zip(vec[j:], prow[j:])]
            else:
                vec[j:] = [am * x - bm * y for x, y in zip(vec[j:], prow[j:])]
            steps += 1
            if steps % _STRIP_EVERY == 0:
                _strip_content(vec)
        return vec

    def add(self, row):
        """Insert ``row`` if it enlarges the row space; True when rank grew."""
        vec = self.reduce(row)
        lead = make_primitive(vec)
        if lead < 0:
            return False
        pos = bisect_left(self.pivots, lead)
        self.pivots.insert(pos, lead)
        self.rows.insert(pos, vec)
        return True

    def contains(self, row):
        """Membership test; does not modify the basis."""
        return not any(self.reduce(row))
