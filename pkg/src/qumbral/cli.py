"""Command-line interface: ``qumbral {numbers,poly,expand,verify,carlitz}``."""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import families as fam
from .basis import expand_in_fe, expand_in_fe_order_r, expand_in_fe_order_r_multinomial
from .carlitz import carlitz_numbers, carlitz_poly, carlitz_to_json, expand_in_carlitz_basis
from .exprparse import ParseError, parse_poly
from .identities import REGISTRY, UnknownIdentity, run_suite
from .qcore import Poly
from .scalars import Field, InvalidField, dump_scalar, parse_rational, render

FAMILIES = {
    "bernoulli": fam.QBERNOULLI,
    "euler": fam.QEULER,
    "frobenius": fam.QFROBENIUS_EULER,
    "frobenius-r": fam.QFROBENIUS_EULER_R,
    "bernoulli-r": fam.QBERNOULLI_R,
}

CARLITZ_NOTE = "algorithmic answer by triangular solve; not a closed form"


class UsageError(Exception):
    pass


def max_order() -> int:
    try:
        return int(os.environ.get("QFE_MAX_ORDER", "64"))
    except ValueError:
        raise UsageError("QFE_MAX_ORDER must be an integer") from None


def check_order(n: int):
    if n < 0:
        raise UsageError("n must be nonnegative")
    if n + 2 > max_order():
        raise UsageError(f"requested order {n + 2} exceeds QFE_MAX_ORDER={max_order()}")


def make_field(q_spec: str, lam_spec: str, default_lambda: str | None = None) -> Field:
    if lam_spec == "symbolic" and q_spec != "symbolic" and default_lambda is not None:
        lam_spec = default_lambda
    if q_spec == "symbolic" and lam_spec == "symbolic":
        return Field.symbolic()
    if "symbolic" in (q_spec, lam_spec):
        raise UsageError("--q and --lambda must both be symbolic or both be rational literals")
    try:
        return Field.numeric(parse_rational(q_spec), parse_rational(lam_spec))
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def render_poly(p: Poly, latex: bool = False, var: str = "x") -> str:
    if not p:
        return "0"
    parts = []
    for k in range(p.degree, -1, -1):
        c = p[k]
        if not c:
            continue
        cs = render(c, latex)
        mono = "" if k == 0 else (var if k == 1 else (f"{var}^{{{k}}}" if latex else f"{var}^{k}"))
        if not mono:
            parts.append(f"({cs})" if not latex else cs)
        elif cs == "1":
            parts.append(mono)
        else:
            parts.append(f"\\left({cs}\\right) {mono}" if latex else f"({cs})*{mono}")
    return " + ".join(parts)


def emit(data: dict, fmt: str, plain_lines, latex_text):
    if fmt == "json":
        print(json.dumps(data))
    elif fmt == "latex":
        print(latex_text())
    else:
        for line in plain_lines():
            print(line)


def latex_rows(values) -> str:
    rows = [r"\begin{tabular}{rl}", r"$k$ & value \\ \hline"]
    rows += [f"{k} & ${render(v, latex=True)}$ \\\\" for k, v in enumerate(values)]
    rows.append(r"\end{tabular}")
    return "\n".join(rows)


def family_id(args) -> fam.FamilyId:
    kind = FAMILIES[args.family]
    r = args.r if kind in (fam.QFROBENIUS_EULER_R, fam.QBERNOULLI_R) else 1
    return fam.FamilyId(kind, r)


def cmd_numbers(args) -> int:
    check_order(args.n)
    F = make_field(args.q, args.lam)
    table = fam.numbers_for(F, family_id(args), args.n)
    data = {**table.to_json(), "field": F.describe()}
    emit(
        data,
        args.format,
        lambda: [f"{n}\t{render(v)}" for n, v in enumerate(table.values)],
        table.to_latex,
    )
    return 0


def cmd_poly(args) -> int:
    check_order(args.n)
    F = make_field(args.q, args.lam)
    family = family_id(args)
    p = fam.poly_for(F, family, args.n)
    data = {"family": family.kind, "r": family.r, "n": args.n, "field": F.describe(), "poly": p.to_json()}
    if family.assumption:
        data["assumption"] = family.assumption
    emit(data, args.format, lambda: [render_poly(p)], lambda: f"${render_poly(p, latex=True)}$")
    return 0


def read_poly_source(src: str) -> str:
    path = Path(src)
    try:
        if path.is_file():
            return path.read_text()
    except OSError:
        pass
    return src


def cmd_expand(args) -> int:
    F = make_field(args.q, args.lam)
    p = parse_poly(read_poly_source(args.poly), F)
    check_order(max(p.degree, 0))
    r = args.r if args.basis == "frobenius-r" else 1
    if args.route == "multinomial":
        e = expand_in_fe_order_r_multinomial(F, p, r)
    elif r == 1:
        e = expand_in_fe(F, p)
    else:
        e = expand_in_fe_order_r(F, p, r)
    emit(
        e.to_json(),
        args.format,
        lambda: [f"C_{k}\t{render(c)}" for k, c in enumerate(e.coeffs)],
        lambda: latex_rows(e.coeffs),
    )
    return 0


def cmd_verify(args) -> int:
    if args.max_n < 0:
        raise UsageError("--max-n must be nonnegative")
    names = "all" if args.suite == "all" else [s.strip() for s in args.suite.split(",") if s.strip()]
    if names != "all":
        unknown = [n for n in names if n not in REGISTRY]
        if unknown:
            raise UsageError(f"unknown identity: {', '.join(unknown)} (known: {', '.join(REGISTRY)})")
    check_order(args.max_n)
    reports = run_suite(names, args.max_n, args.max_r, args.mode, args.trials, args.seed)
    failed = [r for r in reports if not r.passed]
    if args.format == "plain":
        for r in reports:
            print(f"{r.status}\t{r.identity}\t{json.dumps(r.params)}")
    else:
        for r in reports:
            print(json.dumps(r.to_json()))
    print(f"{len(reports) - len(failed)}/{len(reports)} checks passed", file=sys.stderr)
    return 1 if failed else 0


def cmd_carlitz(args) -> int:
    check_order(args.n)
    F = make_field(args.q, args.lam, default_lambda="0")
    if args.expand is not None:
        p = parse_poly(read_poly_source(args.expand), F)
        coeffs = expand_in_carlitz_basis(F, p)
        data = {"coeffs": [dump_scalar(c) for c in coeffs], "note": CARLITZ_NOTE}
        emit(
            data,
            args.format,
            lambda: [f"# {CARLITZ_NOTE}"] + [f"C_{k}\t{render(c)}" for k, c in enumerate(coeffs)],
            lambda: f"% {CARLITZ_NOTE}\n" + latex_rows(coeffs),
        )
    elif args.poly:
        p = carlitz_poly(F, args.n)
        emit(
            carlitz_to_json(p),
            args.format,
            lambda: [render_poly(p, var="y") + "    (y = q^x)"],
            lambda: f"${render_poly(p, latex=True, var='y')}, \\quad y = q^{{x}}$",
        )
    else:
        values = carlitz_numbers(F, args.n)
        emit(
            {"values": [dump_scalar(v) for v in values], "field": F.describe()},
            args.format,
            lambda: [f"{n}\t{render(v)}" for n, v in enumerate(values)],
            lambda: latex_rows(values),
        )
    return 0


def _field_args(p: argparse.ArgumentParser):
    p.add_argument("--q", default="symbolic", help="'symbolic' or a rational literal p/q")
    p.add_argument("--lambda", dest="lam", default="symbolic", help="'symbolic' or a rational literal")
    p.add_argument("--format", choices=["plain", "json", "latex"], default="plain")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qumbral", description="Exact q-umbral calculus toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, fn, helptext in [
        ("numbers", cmd_numbers, "number table v_0..v_n of a family"),
        ("poly", cmd_poly, "n-th polynomial of a family"),
    ]:
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--family", choices=list(FAMILIES), default="frobenius")
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--r", type=int, default=1)
        _field_args(p)
        p.set_defaults(func=fn)

    p = sub.add_parser("expand", help="expand a polynomial in a q-Frobenius-Euler basis")
    p.add_argument("--poly", required=True, help="expression in x, or a file containing one")
    p.add_argument("--basis", choices=["frobenius", "frobenius-r"], default="frobenius")
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--route", choices=["functional", "multinomial"], default="functional")
    _field_args(p)
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("verify", help="check registered identities exactly")
    p.add_argument("--suite", default="all", help="'all' or comma-separated identity names")
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--max-r", type=int, default=3)
    p.add_argument("--mode", choices=["symbolic", "numeric"], default="symbolic")
    p.add_argument("--trials", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=["plain", "json"], default="json")
    p.add_argument("--list", action="store_true", help="list identities and exit")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("carlitz", help="Carlitz q-Bernoulli numbers, polynomials and basis expansion")
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--poly", action="store_true", help="print beta_n(x) as a polynomial in y = q^x")
    p.add_argument("--expand", metavar="EXPR", help="polynomial in [x]_q (written with x) to expand")
    _field_args(p)
    p.set_defaults(func=cmd_carlitz)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "verify" and args.list:
        for ident in REGISTRY.values():
            print(f"{ident.name}\t{ident.description}")
        return 0
    try:
        if getattr(args, "r", 1) < 1 or getattr(args, "max_r", 1) < 1:
            raise UsageError("r must be at least 1")
        return args.func(args)
    except (UsageError, ParseError, InvalidField, UnknownIdentity, ValueError) as exc:
        print(f"qumbral: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
