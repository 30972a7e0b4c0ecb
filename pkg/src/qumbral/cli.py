"""Command-line front end: ``table``, ``verify``, ``expand`` and ``eval``.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 evaluation at a pole.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from .cfactorial import get_cseq
from .exactnum import PoleError, qrat_eval
from .families import Family, build_table, expand_in_bernoulli_basis, expand_in_euler_basis
from .formats import (
    ParseError,
    latex_rat,
    latex_table,
    parse_polynomial,
    rat_to_json,
    table_rows_csv,
    xpoly_to_json,
)
from .identities import REGISTRY, UnknownIdentity, run_all, run_check

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_POLE = 0, 1, 2, 3

BASES = ("bernoulli", "euler")


class UsageError(Exception):
    pass


def _family(name: str) -> Family:
    try:
        return Family.parse(name)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _fraction(text: str, flag: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"{flag} expects a rational like 3 or -5/2, got {text!r}") from None


# -- table -------------------------------------------------------------------


def table_document(family, n_max: int, fmt: str) -> str:
    family = _family(family) if not isinstance(family, Family) else family
    if n_max < 0:
        raise UsageError("--n must be >= 0")
    tab = build_table(family, n_max)
    rows = list(zip(range(n_max + 1), tab.polys, tab.numbers))
    if fmt == "csv":
        return table_rows_csv(rows)
    if fmt == "latex":
        return latex_table(family.value, rows)
    doc = {
        "family": family.value,
        "rows": [
            {"n": n, "poly": xpoly_to_json(p), "number": rat_to_json(u)} for n, p, u in rows
        ],
    }
    return json.dumps(doc, indent=2) + "\n"


# -- verify ------------------------------------------------------------------


def _verify_text(reports) -> str:
    lines = []
    for r in reports:
        for o in r.outcomes:
            status = "PASS" if o.passed else "FAIL"
            line = f"{status} {r.id} n={o.n}"
            if o.witness:
                w = o.witness
                extra = f" [{w.get('label')}]"
                if "q" in w:
                    extra += f" q={w['q']}"
                if "lhs" in w:
                    extra += f" lhs={w['lhs']} rhs={w['rhs']} diff={w['difference']}"
                elif "error" in w:
                    extra += f" error={w['error']}"
                line += extra
            lines.append(line)
        for key, val in r.notes.items():
            lines.append(f"NOTE {r.id} {key}: {val}")
        if not r.outcomes:
            lines.append(f"SKIP {r.id} (no index in range {r.n_range[0]}..{r.n_range[1]})")
    passed = sum(r.passed for r in reports)
    lines.append(f"{passed}/{len(reports)} identities passed")
    return "\n".join(lines) + "\n"


def _verify_csv(reports) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["id", "n", "pass"])
    for r in reports:
        for o in r.outcomes:
            w.writerow([r.id, o.n, "pass" if o.passed else "fail"])
    return buf.getvalue()


def _verify_latex(reports) -> str:
    lines = ["\\begin{tabular}{llc}", "\\hline", "identity & $n$ & result \\\\", "\\hline"]
    for r in reports:
        lo, hi = r.n_range
        result = "pass" if r.passed else "fail at $n=" + ",".join(str(o.n) for o in r.failures) + "$"
        lines.append(f"\\texttt{{{r.id}}} & ${lo}..{hi}$ & {result} \\\\")
    lines += ["\\hline", "\\end{tabular}"]
    return "\n".join(lines) + "\n"


def verify_document(ident: str, n_max: int, mode: str, fmt: str) -> tuple[str, bool]:
    if n_max < 0:
        raise UsageError("--n must be >= 0")
    if ident == "all":
        reports = run_all(n_max, mode)
    else:
        reports = [run_check(ident, n_max, mode)]
    ok = all(r.passed for r in reports)
    if fmt == "json":
        doc = {
            "pass": ok,
            "reports": [r.to_dict() for r in reports],
            "metadata": {"wall_time": {r.id: round(r.wall_time, 6) for r in reports}},
        }
        text = json.dumps(doc, indent=2) + "\n"
    elif fmt == "csv":
        text = _verify_csv(reports)
    elif fmt == "latex":
        text = _verify_latex(reports)
    else:
        text = _verify_text(reports)
    return text, ok


# -- expand ------------------------------------------------------------------


def expand_document(literal: str, basis: str, fmt: str) -> str:
    if basis not in BASES:
        raise UsageError(f"unsupported basis {basis!r} (choose from {', '.join(BASES)})")
    p = parse_polynomial(literal)
    cs = get_cseq()
    if basis == "bernoulli":
        coeffs = expand_in_bernoulli_basis(p, cs)
    else:
        coeffs = expand_in_euler_basis(p, cs)
    if fmt == "json":
        doc = {"basis": basis, "coefficients": [rat_to_json(c) for c in coeffs]}
        return json.dumps(doc, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        for k, c in enumerate(coeffs):
            w.writerow([k, str(c)])
        return buf.getvalue()
    if fmt == "latex":
        sym = "\\beta" if basis == "bernoulli" else "\\mathcal{E}"
        terms = [f"\\left({latex_rat(c)}\\right){sym}_{{{k}}}(x)" for k, c in enumerate(coeffs) if c]
        return (" + ".join(terms) or "0") + "\n"
    return "[" + ", ".join(str(c) for c in coeffs) + "]\n"


# -- eval --------------------------------------------------------------------


def _pole_factor(q0: Fraction) -> str:
    """The linear factor j*q - (j-1) that vanishes at q0 = (j-1)/j."""
    if q0 == 0:
        return "q"
    j = 1 / (1 - q0)
    if j.denominator == 1 and j > 1:
        return f"{j.numerator}q-{j.numerator - 1}"
    return f"denominator at q={q0}"


def eval_value(family, n: int, q0: Fraction, x0: Fraction) -> Fraction:
    """G(n; q0, x0) exactly; the symbolic value is formed first, then specialised."""
    family = _family(family) if not isinstance(family, Family) else family
    if n < 0:
        raise UsageError("N must be >= 0")
    p = build_table(family, n).polys[n]
    acc = Fraction(0)
    for k, c in enumerate(p.coeffs):
        if c:
            acc += qrat_eval(c, q0) * x0**k
    return acc


# -- entry point ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="qumbral",
        description="Degenerate Bernoulli, Euler and Genocchi polynomials over Q(q).",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    t = sub.add_parser("table", help="emit numbers and polynomials for n = 0..N")
    t.add_argument("family")
    t.add_argument("--n", type=int, default=4)
    t.add_argument("--format", choices=("json", "csv", "latex"), default="json")

    v = sub.add_parser("verify", help="check a registered identity (or 'all')")
    v.add_argument("id")
    v.add_argument("--n", type=int, default=6)
    v.add_argument("--mode", choices=("symbolic", "sampled"), default="symbolic")
    v.add_argument("--format", choices=("text", "json", "csv", "latex"), default="text")

    e = sub.add_parser("expand", help="expand a polynomial in x over Q(q) in a degenerate basis")
    e.add_argument("polynomial")
    e.add_argument("--basis", default="bernoulli")
    e.add_argument("--format", choices=("text", "json", "csv", "latex"), default="text")

    ev = sub.add_parser("eval", help="evaluate a polynomial at rational q and x")
    ev.add_argument("family")
    ev.add_argument("N", type=int)
    ev.add_argument("--q", required=True)
    ev.add_argument("--x", default="0")

    sub.add_parser("list", help="list registered identity ids")
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    out = sys.stdout
    try:
        if args.command == "table":
            out.write(table_document(args.family, args.n, args.format))
        elif args.command == "verify":
            text, ok = verify_document(args.id, args.n, args.mode, args.format)
            out.write(text)
            return EXIT_OK if ok else EXIT_FAIL
        elif args.command == "expand":
            out.write(expand_document(args.polynomial, args.basis, args.format))
        elif args.command == "eval":
            q0 = _fraction(args.q, "--q")
            x0 = _fraction(args.x, "--x")
            try:
                value = eval_value(args.family, args.N, q0, x0)
            except PoleError as exc:
                print(
                    f"qumbral: pole at q={exc.q0}: factor ({_pole_factor(exc.q0)}) vanishes",
                    file=sys.stderr,
                )
                return EXIT_POLE
            out.write(f"{value}\n")
        elif args.command == "list":
            out.write("\n".join(sorted(REGISTRY)) + "\n")
    except UnknownIdentity as exc:
        print(f"qumbral: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"qumbral: parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except UsageError as exc:
        print(f"qumbral: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
