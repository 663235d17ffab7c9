# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled integer row-echelon kernel.

Behavioural twin of ``_rowred_py``; see that module for the algorithm notes.
Entries are arbitrary-precision Python ints, so the arithmetic itself stays
in the CPython long implementation -- the speedup comes from removing the
interpreter loop overhead around it.
"""

from bisect import bisect_left
from math import gcd

BACKEND = "cython"

cdef Py_ssize_t STRIP_EVERY = 8


cpdef Py_ssize_t make_primitive(list row):
    """In place: divide by the content, make the leading entry positive.

    Returns the index of the leading entry, or -1 for a zero row.
    """
    cdef Py_ssize_t n = len(row)
    cdef Py_ssize_t i, lead = -1
    cdef object g = 0
    cdef object v
    for i in range(n):
        v = row[i]
        if v:
            if lead < 0:
                lead = i
            g = gcd(g, v)
    if lead < 0:
        return -1
    if row[lead] < 0:
        g = -g
    if g != 1:
        for i in range(lead, n):
            v = row[i]
            if v:
                row[i] = v // g
    return lead


cdef void _strip_content(list vec):
    cdef Py_ssize_t n = len(vec)
    cdef Py_ssize_t i
    cdef object g = 0
    cdef object v
    for i in range(n):
        g = gcd(g, vec[i])
        if g == 1:
            return
    if g > 1:
        for i in range(n):
            v = vec[i]
            if v:
                vec[i] = v // g


cdef class RowBasis:
    """Incrementally accumulated echelon basis of an integer row space."""

    cdef public Py_ssize_t ncols
    cdef public list rows
    cdef public list pivots

    def __init__(self, Py_ssize_t ncols):
        self.ncols = ncols
        self.rows = []
        self.pivots = []

    @property
    def rank(self):
        return len(self.rows)

    cpdef list reduce(self, row):
        """Reduce a copy of ``row`` against the basis.

        The result is an integer multiple of the true residual; it is all
        zeros exactly when ``row`` lies in the accumulated row space.
        """
        cdef list vec = list(row)
        if len(vec) != self.ncols:
            raise ValueError(
                f"row has {len(vec)} entries, expected {self.ncols}")
        cdef list rows = self.rows
        cdef list pivots = self.pivots
        cdef Py_ssize_t nbasis = len(rows)
        cdef Py_ssize_t n = self.ncols
        cdef Py_ssize_t i, j, k, steps = 0
        cdef list prow
        cdef object a, b, g, am, bm, y
        for i in range(nbasis):
            j = pivots[i]
            b = vec[j]
            if not b:
                continue
            prow = rows[i]
            a = prow[j]
            g = gcd(a, b)
            am = a // g
            bm = b // g
            if am == 1:
                for k in range(j, n):
                    y = prow[k]
                    if y:
                        vec[k] = vec[k] - bm * y
            else:
                for k in range(j, n):
                    y = prow[k]
                    if y:
                        vec[k] = am * vec[k] - bm * y
                    else:
                        vec[k] = am * vec[k]
            steps += 1
            if steps % STRIP_EVERY == 0:
                _strip_content(vec)
        return vec

    cpdef bint add(self, row):
        """Insert ``row`` if it enlarges the row space; True when rank grew."""
        cdef list vec = self.reduce(row)
        cdef Py_ssize_t lead = make_primitive(vec)
        if lead < 0:
            return False
        cdef Py_ssize_t pos = bisect_left(self.pivots, lead)
        self.pivots.insert(pos, lead)
        self.rows.insert(pos, vec)
        return True

    def contains(self, row):
        """Membership test; does not modify the basis."""
        return not any(self.reduce(row))
