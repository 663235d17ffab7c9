"""Minimal polynomial expression grammar and factoring over an arrangement.

Grammar: variables x1..xN, integer or rational literals (3, 3/4), the
operators + - * ^ and parentheses.  '/' is only legal inside a rational
literal; there is no division operator.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .arrangement import Arrangement
from .errors import ExprError, FactorOverDeltaError
from .polynomials import Poly, grlex_key

_TOKEN = re.compile(r"(\d+/\d+|\d+)|(x\d+)|([()+\-*^])|(\S)")


def _tokenize(text):
    tokens = []
    for m in _TOKEN.finditer(text):
        lit, var, op, junk = m.groups()
        if junk:
            raise ExprError(f"unexpected character {junk!r} at position {m.start()}")
        if lit:
            tokens.append(("lit", Fraction(lit), m.start()))
        elif var:
            tokens.append(("var", int(var[1:]), m.start()))
        else:
            tokens.append((op, op, m.start()))
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text, nvars):
        self.text = text
        self.nvars = nvars
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def take(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind):
        tok = self.take()
        if tok[0] != kind:
            raise ExprError(f"expected {kind!r} at position {tok[2]} in {self.text!r}")
        return tok

    def parse(self):
        poly = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ExprError(f"trailing input at position {tok[2]} in {self.text!r}")
        return poly

    def expr(self):
        negate = False
        if self.peek()[0] == "-":
            self.take()
            negate = True
        poly = self.term()
        if negate:
            poly = -poly
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            poly = poly + rhs if op == "+" else poly - rhs
        return poly

    def term(self):
        poly = self.factor()
        while self.peek()[0] == "*":
            self.take()
            poly = poly * self.factor()
        return poly

    def factor(self):
        poly = self.atom()
        if self.peek()[0] == "^":
            self.take()
            tok = self.take()
            if tok[0] != "lit" or tok[1].denominator != 1 or tok[1] < 0:
                raise ExprError(f"exponent must be a nonnegative integer "
                                f"(position {tok[2]})")
            poly = poly ** int(tok[1])
        return poly

    def atom(self):
        tok = self.take()
        if tok[0] == "lit":
            return Poly.constant(self.nvars, tok[1])
        if tok[0] == "var":
            if not 1 <= tok[1] <= self.nvars:
                raise ExprError(f"variable x{tok[1]} out of range 1..{self.nvars}")
            return Poly.variable(self.nvars, tok[1] - 1)
        if tok[0] == "(":
            poly = self.expr()
            self.expect(")")
            return poly
        raise ExprError(f"unexpected token at position {tok[2]} in {self.text!r}")


def parse_poly(text, nvars) -> Poly:
    """Parse an expression into a polynomial in x1..x{nvars}."""
    return _Parser(text, nvars).parse()


def poly_div_exact(f: Poly, g: Poly):
    """Exact polynomial division f / g, or None when g does not divide f."""
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    quotient = {}
    work = f
    lead_g = max(g.terms, key=grlex_key)
    cg = g.terms[lead_g]
    while not work.is_zero():
        lead_f = max(work.terms, key=grlex_key)
        mono = tuple(a - b for a, b in zip(lead_f, lead_g))
        if any(e < 0 for e in mono):
            return None
        coeff = work.terms[lead_f] / cg
        quotient[mono] = coeff
        work = work - g.shift(mono).scale(coeff)
    return Poly(f.nvars, quotient)


def factor_over_forms(poly: Poly, arrangement: Arrangement):
    """Write ``poly`` as constant * product of arrangement forms.

    Trial division runs over the forms in their canonical order; the multiset
    of factors is unique since distinct forms are non-proportional primes.
    Returns ``(constant, ascending index tuple)``.
    """
    if poly.is_zero():
        raise FactorOverDeltaError("denominator is the zero polynomial")
    work = poly
    indices = []
    for i, form in enumerate(arrangement.forms):
        fp = form.poly()
        while True:
            quot = poly_div_exact(work, fp)
            if quot is None:
                break
            work = quot
            indices.append(i)
    if work.degree() > 0:
        raise FactorOverDeltaError(
            f"denominator has the non-form factor {work} left over")
    const = work.terms.get((0,) * poly.nvars, Fraction(0))
    return const, tuple(indices)
