"""Command-line surface.

All data goes to stdout, diagnostics to stderr.  Numeric values that can
outgrow 64 bits (dimensions, coefficients, Möbius values, coordinates) are
emitted as strings in JSON output, unconditionally.  Exit codes: 0 success or
verification pass, 1 verification mismatch, 2 input error, 3 internal
invariant violation.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from . import __version__
from .arrangement import FAMILIES, build_arrangement, family
from .errors import ArrpoinError, InputError
from .exprs import factor_over_forms, parse_poly
from .lattice import compute_lattice
from .oracle import FiltrationOracle, FractionGenerator
from .polynomials import Poly
from .series import (bigraded_series, cumulative_series, poincare_polynomial,
                     reciprocal_dims_by_flat, reciprocal_dims_total,
                     series_from_exponents, try_factor_exponents)

_RATIONAL_RE = re.compile(r"-?\d+(/\d+)?$")


def _parse_rational(value, where):
    if isinstance(value, bool):
        raise InputError(f"{where}: booleans are not numbers")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str) and _RATIONAL_RE.match(value.strip()):
        return Fraction(value.strip())
    raise InputError(f"{where}: expected an integer or an \"a/b\" string, "
                     f"got {value!r}")


def _reject_float(text):
    raise InputError(f"float literal {text} is not accepted; "
                     "use an exact \"a/b\" string")


def load_spec(stream):
    """Parse an arrangement document: {ell, forms, name?, exponents?}."""
    try:
        doc = json.load(stream, parse_float=_reject_float)
    except json.JSONDecodeError as exc:
        raise InputError(f"not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise InputError("top-level JSON value must be an object")
    if "ell" not in doc or "forms" not in doc:
        raise InputError("document needs the keys \"ell\" and \"forms\"")
    ell = doc["ell"]
    if isinstance(ell, bool) or not isinstance(ell, int) or ell < 0:
        raise InputError("\"ell\" must be a nonnegative integer")
    raw_forms = doc["forms"]
    if not isinstance(raw_forms, list) or any(not isinstance(f, list) for f in raw_forms):
        raise InputError("\"forms\" must be a list of coefficient vectors")
    forms = [[_parse_rational(v, f"form {i + 1}") for v in vec]
             for i, vec in enumerate(raw_forms)]
    arrangement = build_arrangement(forms, ell)
    name = doc.get("name")
    if name is not None and not isinstance(name, str):
        raise InputError("\"name\" must be a string")
    exponents = doc.get("exponents")
    if exponents is not None:
        if (not isinstance(exponents, list)
                or any(isinstance(d, bool) or not isinstance(d, int) for d in exponents)):
            raise InputError("\"exponents\" must be a list of integers")
        if len(exponents) != ell:
            raise InputError(
                f"\"exponents\" has length {len(exponents)}, expected ell={ell}")
        exponents = tuple(exponents)
    return arrangement, exponents, name


def _parse_exponents_flag(text, ell):
    try:
        values = tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise InputError(f"--exponents must be comma-separated integers: {exc}")
    if len(values) != ell:
        raise InputError(
            f"--exponents has length {len(values)}, expected ell={ell}")
    return values


def get_input(args):
    """Resolve --file / --family into (arrangement, exponents, name)."""
    if args.file and args.family:
        raise InputError("choose one of --file or --family, not both")
    if args.family:
        if args.ell is None:
            raise InputError("--family requires --ell")
        arrangement, exponents = family(args.family, args.ell)
        name = f"{args.family}-{args.ell}"
    elif args.file:
        if args.file == "-":
            arrangement, exponents, name = load_spec(sys.stdin)
        else:
            try:
                with open(args.file, encoding="utf-8") as fh:
                    arrangement, exponents, name = load_spec(fh)
            except OSError as exc:
                raise InputError(f"cannot read {args.file}: {exc}") from exc
    else:
        raise InputError("no arrangement given (use --file or --family)")
    flag = getattr(args, "exponents", None)
    if flag:
        exponents = _parse_exponents_flag(flag, arrangement.ell)
    return arrangement, exponents, name


# -- rendering ---------------------------------------------------------------


def _s(value):
    """Stringify a potentially-big exact value for JSON output."""
    return str(value)


def _meta(command, arrangement, name):
    return {
        "tool": "arrpoin",
        "version": __version__,
        "command": command,
        "name": name,
        "ell": arrangement.ell,
        "num_forms": len(arrangement.forms),
        "forms": [[_s(c) for c in form.coeffs] for form in arrangement.forms],
    }


def _format_table(header, rows):
    """Right-aligned plain-text table."""
    table = [header] + [[str(c) for c in row] for row in rows]
    widths = [max(len(row[i]) for row in table) for i in range(len(header))]
    lines = []
    for row in table:
        lines.append("  ".join(cell.rjust(w) for cell, w in zip(row, widths)))
    return lines


def _grid_lines(title, grid):
    header = [""] + [f"q={q}" for q in range(grid.max_q + 1)]
    rows = [[f"p={p}"] + [str(v) for v in grid.coeffs[p]]
            for p in range(grid.max_p + 1)]
    return [title] + _format_table(header, rows)


def _grid_json(grid):
    return {
        "max_p": grid.max_p,
        "max_q": grid.max_q,
        "rows": [[_s(v) for v in row] for row in grid.coeffs],
    }


def _format_generator(gen: FractionGenerator, arrangement):
    num = str(gen.numerator)
    if len(gen.numerator.terms) > 1:
        num = f"({num})"
    if not gen.denominator:
        return num
    factors = []
    seen = {}
    for i in gen.denominator:
        seen[i] = seen.get(i, 0) + 1
    for i in sorted(seen):
        base = f"({arrangement.forms[i]})"
        factors.append(base if seen[i] == 1 else f"{base}^{seen[i]}")
    return f"{num} / " + "*".join(factors)


def _emit(lines):
    for line in lines:
        print(line)


# -- subcommands -------------------------------------------------------------


def cmd_lattice(args):
    arrangement, _, name = get_input(args)
    lattice = compute_lattice(arrangement)
    if args.json:
        doc = {
            "meta": _meta("lattice", arrangement, name),
            "flats": [
                {
                    "index": i,
                    "codim": flat.codim,
                    "dim": flat.dim,
                    "mu": _s(lattice.mu[i]),
                    "rref": [[_s(c) for c in row] for row in flat.rref],
                }
                for i, flat in enumerate(lattice.flats)
            ],
        }
        print(json.dumps(doc, indent=2))
        return 0
    lines = [f"flats: {len(lattice)} (ell={arrangement.ell}, "
             f"forms={len(arrangement.forms)})"]
    for i, flat in enumerate(lattice.flats):
        if flat.codim == 0:
            eqs = "-"
        else:
            eqs = "; ".join(str(Poly.linear(row)) for row in flat.rref)
        lines.append(f"[{i}] codim={flat.codim} dim={flat.dim} "
                     f"mu={lattice.mu[i]}  cut out by: {eqs}")
    _emit(lines)
    return 0


def cmd_poincare(args):
    arrangement, _, name = get_input(args)
    lattice = compute_lattice(arrangement)
    poly = poincare_polynomial(lattice)
    exponents = try_factor_exponents(poly, arrangement.ell)
    if args.json:
        doc = {
            "meta": _meta("poincare", arrangement, name),
            "polynomial": {
                "coefficients": [_s(c) for c in poly.coeffs],
                "pretty": str(poly),
                "exponents": list(exponents) if exponents is not None else None,
            },
        }
        print(json.dumps(doc, indent=2))
        return 0
    print(str(poly))
    if exponents is not None:
        print("exponents: " + ", ".join(str(d) for d in exponents))
    else:
        print("exponents: does not factor")
    return 0


def _exponent_check(grid, exponents):
    """Compare the lattice grid against the exponent-product grid."""
    other = series_from_exponents(exponents, grid.max_p, grid.max_q)
    mismatches = [(p, q, grid.entry(p, q), other.entry(p, q))
                  for p in range(grid.max_p + 1)
                  for q in range(grid.max_q + 1)
                  if grid.entry(p, q) != other.entry(p, q)]
    return mismatches


def cmd_series(args):
    arrangement, exponents, name = get_input(args)
    lattice = compute_lattice(arrangement)
    grid = bigraded_series(lattice, args.max_p, args.max_q)
    cumulative = (cumulative_series(lattice, args.max_p, args.max_q)
                  if args.cumulative else None)
    mismatches = _exponent_check(grid, exponents) if exponents is not None else None
    if args.json:
        doc = {"meta": _meta("series", arrangement, name),
               "grid": _grid_json(grid)}
        if cumulative is not None:
            doc["cumulative"] = _grid_json(cumulative)
        if exponents is not None:
            doc["exponents_check"] = {
                "exponents": list(exponents),
                "match": not mismatches,
                "mismatches": [
                    {"p": p, "q": q, "lattice": _s(a), "exponents": _s(b)}
                    for p, q, a, b in mismatches
                ],
            }
        print(json.dumps(doc, indent=2))
        return 1 if mismatches else 0
    _emit(_grid_lines("graded dims dim(p,q); p down, q across", grid))
    if cumulative is not None:
        print()
        _emit(_grid_lines("cumulative dims (p,q)", cumulative))
    if exponents is not None:
        label = ", ".join(str(d) for d in exponents)
        if mismatches:
            print(f"exponents check ({label}): FAIL")
            for p, q, a, b in mismatches:
                print(f"  (p={p}, q={q}) lattice={a} exponents={b}")
            return 1
        print(f"exponents check ({label}): pass")
    return 0


def cmd_cseries(args):
    arrangement, _, name = get_input(args)
    lattice = compute_lattice(arrangement)
    rows = reciprocal_dims_by_flat(lattice, args.max_q)
    total = reciprocal_dims_total(lattice, args.max_q)
    if args.json:
        doc = {
            "meta": _meta("cseries", arrangement, name),
            "flats": [
                {"index": row.flat_index, "codim": row.codim,
                 "mu": _s(row.mu), "dims": [_s(v) for v in row.dims]}
                for row in rows
            ],
            "total": [_s(v) for v in total],
        }
        print(json.dumps(doc, indent=2))
        return 0
    header = ["flat", "codim", "mu"] + [f"q={q}" for q in range(args.max_q + 1)]
    body = [[f"[{row.flat_index}]", row.codim, row.mu] + list(row.dims)
            for row in rows]
    body.append(["total", "", ""] + total)
    _emit([f"reciprocal span dims by flat, q=0..{args.max_q}"]
          + _format_table(header, body))
    return 0


def cmd_dims(args):
    arrangement, _, name = get_input(args)
    oracle = FiltrationOracle(arrangement)
    rows = oracle.graded_dims_by_flat(args.p, args.q)
    total = sum(row.contribution for row in rows)
    graded = oracle.dim_graded(args.p, args.q)
    ok = total == graded
    if args.json:
        doc = {
            "meta": _meta("dims", arrangement, name),
            "flats": [
                {"index": row.flat_index, "codim": row.codim,
                 "poly_dim": _s(row.poly_dim),
                 "reciprocal_dim": _s(row.reciprocal_dim),
                 "contribution": _s(row.contribution)}
                for row in rows
            ],
            "total": _s(total),
            "graded_dim": _s(graded),
            "match": ok,
        }
        print(json.dumps(doc, indent=2))
    else:
        header = ["flat", "codim", "poly_dim", "recip_dim", "contribution"]
        body = [[f"[{r.flat_index}]", r.codim, r.poly_dim, r.reciprocal_dim,
                 r.contribution] for r in rows]
        _emit([f"per-flat split of graded cell (p={args.p}, q={args.q})"]
              + _format_table(header, body))
        print(f"total: {total}   graded dim (oracle): {graded}   "
              f"{'ok' if ok else 'MISMATCH'}")
    if not ok:
        print("error: SplitMismatch: per-flat contributions do not add up",
              file=sys.stderr)
        return 3
    return 0


def cmd_verify(args):
    arrangement, exponents, name = get_input(args)
    lattice = compute_lattice(arrangement)
    oracle = FiltrationOracle(arrangement, lattice)
    grid = bigraded_series(lattice, args.max_p, args.max_q)

    cells = []
    for p in range(args.max_p + 1):
        for q in range(args.max_q + 1):
            formula = grid.entry(p, q)
            brute = oracle.dim_graded(p, q)
            cells.append((p, q, formula, brute, formula == brute))

    flat_rows = reciprocal_dims_by_flat(lattice, args.max_q)
    flat_checks = []
    for row in flat_rows:
        for q in range(args.max_q + 1):
            closed = row.dims[q]
            brute = oracle.reciprocal_dim(q, row.flat_index)
            flat_checks.append((row.flat_index, q, closed, brute,
                                closed == brute))

    mismatches = (_exponent_check(grid, exponents)
                  if exponents is not None else None)
    passed = (all(c[4] for c in cells) and all(f[4] for f in flat_checks)
              and not mismatches)

    if args.json:
        doc = {
            "meta": _meta("verify", arrangement, name),
            "report": {
                "max_p": args.max_p,
                "max_q": args.max_q,
                "cells": [
                    {"p": p, "q": q, "formula": _s(a), "oracle": _s(b),
                     "match": ok}
                    for p, q, a, b, ok in cells
                ],
                "flat_checks": [
                    {"flat": i, "q": q, "closed_form": _s(a), "rank": _s(b),
                     "match": ok}
                    for i, q, a, b, ok in flat_checks
                ],
                "exponents_check": (
                    None if exponents is None else {
                        "exponents": list(exponents),
                        "match": not mismatches,
                    }),
                "verdict": "pass" if passed else "fail",
            },
        }
        print(json.dumps(doc, indent=2))
        return 0 if passed else 1

    header = ["p", "q", "formula", "oracle", "match"]
    body = [[p, q, a, b, "ok" if ok else "MISMATCH"]
            for p, q, a, b, ok in cells]
    _emit([f"graded dims, formula vs oracle (grid {args.max_p} x {args.max_q})"]
          + _format_table(header, body))
    print()
    header = ["flat", "q", "closed_form", "rank", "match"]
    body = [[f"[{i}]", q, a, b, "ok" if ok else "MISMATCH"]
            for i, q, a, b, ok in flat_checks]
    _emit(["reciprocal dims per flat, closed form vs rank"]
          + _format_table(header, body))
    if exponents is not None:
        label = ", ".join(str(d) for d in exponents)
        print(f"exponents check ({label}): "
              + ("pass" if not mismatches else "FAIL"))
        for p, q, a, b in mismatches or []:
            print(f"  (p={p}, q={q}) lattice={a} exponents={b}")
    print(f"verify: {'PASS' if passed else 'FAIL'}")
    return 0 if passed else 1


def _load_basis_file(path, arrangement, q):
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh, parse_float=_reject_float)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"basis file is not valid JSON: {exc}") from exc
    if not isinstance(doc, list):
        raise InputError("basis file must be a JSON list of "
                         "{\"numerator\", \"denominator\"} objects")
    basis = []
    for k, entry in enumerate(doc, start=1):
        if (not isinstance(entry, dict) or "numerator" not in entry
                or "denominator" not in entry):
            raise InputError(f"basis entry {k} needs \"numerator\" and "
                             "\"denominator\" expressions")
        gen, _ = _generator_from_exprs(entry["numerator"], entry["denominator"],
                                       arrangement)
        basis.append(gen)
    return basis


def _generator_from_exprs(num_text, den_text, arrangement):
    """Build a fraction generator from two expressions.

    The denominator must factor into arrangement forms; any constant factor
    is folded into the numerator.
    """
    numerator = parse_poly(num_text, arrangement.ell)
    denominator = parse_poly(den_text, arrangement.ell)
    const, indices = factor_over_forms(denominator, arrangement)
    if const == 0:
        raise InputError("denominator is zero")
    numerator = numerator.scale(Fraction(1) / const)
    return FractionGenerator(numerator, indices), indices


def cmd_decompose(args):
    arrangement, _, name = get_input(args)
    gen, indices = _generator_from_exprs(args.numerator, args.denominator,
                                         arrangement)
    p = args.p if args.p is not None else max(gen.numerator.degree(), 0)
    q = args.q if args.q is not None else len(indices)
    oracle = FiltrationOracle(arrangement)
    if args.basis_file:
        basis = _load_basis_file(args.basis_file, arrangement, q)
    else:
        basis = oracle.graded_basis(p, q)
    coords = oracle.decompose(gen, p, q, basis)
    if args.json:
        doc = {
            "meta": _meta("decompose", arrangement, name),
            "report": {
                "p": p,
                "q": q,
                "element": _format_generator(gen, arrangement),
                "coordinates": [_s(c) for c in coords],
                "basis": [_format_generator(b, arrangement) for b in basis],
            },
        }
        print(json.dumps(doc, indent=2))
        return 0
    print(f"decomposition in graded cell (p={p}, q={q}), "
          "coordinates modulo the lower cells")
    width = max((len(str(c)) for c in coords), default=1)
    for k, (coeff, b) in enumerate(zip(coords, basis), start=1):
        print(f"[{k}] {str(coeff).rjust(width)}  "
              f"{_format_generator(b, arrangement)}")
    return 0


def cmd_family_list(args):
    if args.json:
        doc = {"families": [{"name": n, "description": FAMILIES[n]}
                            for n in sorted(FAMILIES)]}
        print(json.dumps(doc, indent=2))
        return 0
    for n in sorted(FAMILIES):
        print(f"{n}: {FAMILIES[n]}")
    return 0


# -- parser ------------------------------------------------------------------


def _add_input_args(sp, exponents=False):
    sp.add_argument("--file", help="arrangement JSON document ('-' for stdin)")
    sp.add_argument("--family", choices=sorted(FAMILIES),
                    help="built-in family (requires --ell)")
    sp.add_argument("--ell", type=int, help="ambient dimension for --family")
    if exponents:
        sp.add_argument("--exponents",
                        help="comma-separated exponents d1,d2,... "
                             "(cross-checks the product formula)")
    sp.add_argument("--json", action="store_true",
                    help="emit a machine-readable document")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="arrpoin",
        description="Bigraded dimension series of rational functions regular "
                    "off a central hyperplane arrangement, with exact "
                    "brute-force verification.")
    parser.add_argument("--version", action="version",
                        version=f"arrpoin {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("lattice", help="list the intersection lattice")
    _add_input_args(sp)
    sp.set_defaults(func=cmd_lattice)

    sp = sub.add_parser("poincare",
                        help="lattice polynomial of the arrangement")
    _add_input_args(sp)
    sp.set_defaults(func=cmd_poincare)

    sp = sub.add_parser("series", help="graded dimension grid")
    _add_input_args(sp, exponents=True)
    sp.add_argument("--max-p", type=int, default=8)
    sp.add_argument("--max-q", type=int, default=8)
    sp.add_argument("--cumulative", action="store_true",
                    help="also print the cumulative (filtration) grid")
    sp.set_defaults(func=cmd_series)

    sp = sub.add_parser("cseries",
                        help="reciprocal span dimensions, per flat and total")
    _add_input_args(sp)
    sp.add_argument("--max-q", type=int, default=8)
    sp.set_defaults(func=cmd_cseries)

    sp = sub.add_parser("dims",
                        help="per-flat split of one graded cell (oracle)")
    _add_input_args(sp)
    sp.add_argument("--p", type=int, default=1)
    sp.add_argument("--q", type=int, default=1)
    sp.set_defaults(func=cmd_dims)

    sp = sub.add_parser("verify",
                        help="check the closed formulas against the "
                             "brute-force oracle")
    _add_input_args(sp, exponents=True)
    sp.add_argument("--max-p", type=int, default=3)
    sp.add_argument("--max-q", type=int, default=3)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("decompose",
                        help="coordinates of a fraction relative to a basis "
                             "of its graded cell")
    _add_input_args(sp)
    sp.add_argument("--numerator", required=True,
                    help="polynomial expression, e.g. \"x1+2*x2-x3+3\"")
    sp.add_argument("--denominator", required=True,
                    help="product of arrangement forms, e.g. "
                         "\"(x1-x3)*(x2-x3)\"")
    sp.add_argument("--p", type=int, default=None,
                    help="numerator degree bound (default: degree of the "
                         "numerator)")
    sp.add_argument("--q", type=int, default=None,
                    help="denominator size bound (default: number of "
                         "denominator factors)")
    sp.add_argument("--basis-file",
                    help="JSON list of {numerator, denominator} expressions "
                         "to use as the basis (default: greedy basis)")
    sp.set_defaults(func=cmd_decompose)

    sp = sub.add_parser("family-list", help="list built-in families")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_family_list)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc.code}: {exc}", file=sys.stderr)
        return 2
    except ArrpoinError as exc:
        print(f"error: {exc.code}: {exc}", file=sys.stderr)
        return 3


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
