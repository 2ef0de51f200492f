"""Command-line front end.

Subcommands:
  coeff      print the c_k table (or one entry) for a composition
  verify     run an identity sweep, one JSON report line per instance
  linearize  print a linearization table (d, d-tilde or c-tilde)

Exit codes: 0 ok / all verified, 1 falsified value or identity, 2 usage
error, 3 method unsupported for the given shape.  Big integers are emitted
as decimal strings so consumers never lose precision.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Dict

from .coefficients import (
    C_METHODS,
    Composition,
    c_coeff,
    c_table,
    linearization_d,
)
from .exactnum import rat_str
from .identities import IDENTITY_IDS, sweep

_BASIS_VARIANTS = {
    "falling": "d",
    "binom": "d_tilde",
    "rising_over_binom": "c_tilde",
}


def _fmt(v: Fraction) -> str:
    return str(v.numerator) if v.denominator == 1 else rat_str(v)


def _emit_table(values: Dict[int, Fraction], fmt: str) -> None:
    keys = sorted(values)
    if fmt == "json":
        print(json.dumps({str(k): _fmt(values[k]) for k in keys}, separators=(",", ":")))
    elif fmt == "csv":
        print("k,value")
        for k in keys:
            print(f"{k},{_fmt(values[k])}")
    else:
        for k in keys:
            print(f"{k} {_fmt(values[k])}")


def _emit_scalar(k: int, v: Fraction, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(_fmt(v)))
    elif fmt == "csv":
        print("k,value")
        print(f"{k},{_fmt(v)}")
    else:
        print(_fmt(v))


def cmd_coeff(args: argparse.Namespace) -> int:
    try:
        r = Composition.parse(args.r)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    method = args.method
    if method == "hyp3f2" and r.m != 2:
        print(f"error: method hyp3f2 needs exactly two species, got {r.m}", file=sys.stderr)
        return 3
    if args.k is not None:
        if args.k < 1:
            print(f"error: k must be positive, got {args.k}", file=sys.stderr)
            return 2
        value = c_coeff(r, args.k, method)
        if args.k <= r.total and (value.denominator != 1 or value < 1):
            print(f"error: c_{args.k}({r}) = {value} is not a positive integer", file=sys.stderr)
            return 1
        _emit_scalar(args.k, value, args.format)
        return 0
    table = c_table(r, method)
    bad = [k for k in table.values if not table.is_integral(k) or table.value(k) < 1]
    if bad:
        print(f"error: non-integral or non-positive entries at k={bad}", file=sys.stderr)
        return 1
    _emit_table(table.values, args.format)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    if args.id not in IDENTITY_IDS:
        print(f"error: unknown identity {args.id!r}; known: {', '.join(IDENTITY_IDS)}", file=sys.stderr)
        return 2
    fixed_r = None
    if args.r is not None:
        try:
            fixed_r = Composition.parse(args.r)
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
    if (args.n is not None and args.n < 1) or (args.p is not None and args.p < 1):
        print("error: --n and --p must be positive", file=sys.stderr)
        return 2
    all_ok = True
    try:
        for report in sweep(
            args.id,
            n_max=args.n_max,
            m_max=args.m_max,
            r_max=args.r_max,
            n=args.n,
            p=args.p,
            r=fixed_r,
        ):
            print(report.to_json_line())
            all_ok &= report.verified
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0 if all_ok else 1


def cmd_linearize(args: argparse.Namespace) -> int:
    try:
        r = Composition.parse(args.r)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    table = linearization_d(r, _BASIS_VARIANTS[args.basis])
    _emit_table(table.values, args.format)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="genbinom",
        description="Exact generalized binomial coefficients, linearization tables, and identity sweeps.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_coeff = sub.add_parser("coeff", help="print c_k values for a composition")
    p_coeff.add_argument("--r", required=True, help="composition, e.g. 2,1")
    p_coeff.add_argument("--k", type=int, default=None, help="single k instead of the whole table")
    p_coeff.add_argument("--method", choices=C_METHODS, default="genfun")
    p_coeff.add_argument("--format", choices=("json", "csv", "text"), default="json")
    p_coeff.set_defaults(func=cmd_coeff)

    p_verify = sub.add_parser("verify", help="sweep one identity over bounded parameters")
    p_verify.add_argument("--id", required=True, help="identity name")
    p_verify.add_argument("--n-max", type=int, default=6)
    p_verify.add_argument("--m-max", type=int, default=2)
    p_verify.add_argument("--r-max", type=int, default=3)
    p_verify.add_argument("--n", type=int, default=None, help="verify at one n only")
    p_verify.add_argument("--p", type=int, default=None, help="fix p (las0pp only)")
    p_verify.add_argument("--r", default=None, help="fix the composition, e.g. 2,1")
    p_verify.set_defaults(func=cmd_verify)

    p_lin = sub.add_parser("linearize", help="print a linearization table")
    p_lin.add_argument("--r", required=True, help="composition, e.g. 2,2")
    p_lin.add_argument(
        "--basis",
        choices=tuple(_BASIS_VARIANTS),
        default="falling",
        help="falling -> d, binom -> d-tilde, rising_over_binom -> c-tilde",
    )
    p_lin.add_argument("--format", choices=("json", "csv", "text"), default="json")
    p_lin.set_defaults(func=cmd_linearize)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
