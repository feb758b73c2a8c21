"""Command-line interface exposing every toolkit module.

Exit codes: 0 success, 2 usage or parse error, 3 domain error
(perfect square, zero denominator, ...), 4 expansion budget exceeded.
Output formats: plain (human-readable), csv, json. Big integers are
rendered as decimal strings in csv and json, never as native numbers.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from fractions import Fraction
from pathlib import Path

from . import __version__
from .cf import FiniteCF, convergents, evaluate, expand_rational
from .errors import (
    CFSyntaxError,
    ContfracError,
    InvariantError,
    PeriodNotFoundError,
)
from .iteration import (
    POLE,
    MonicClassification,
    _surd_from_parts,
    classify_monic,
    iterate_monic,
    iterate_simple,
)
from .notation import format_cf, parse_cf
from .pell import solve_fundamental, solve_negative, solve_positive
from .rational import decimal_string, parse_rational
from .report import generate_report
from .surd import (
    DEFAULT_EXPANSION_BUDGET,
    PeriodicCF,
    Quadratic,
    QuadraticSurd,
    decimal_approx,
    expand_surd,
    periodic_to_surd,
    sqrt_cf,
    surd,
)


def _csv_text(header: list[str], rows: list[list[str]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue().rstrip("\n")


def _rational_json(value: Fraction) -> dict:
    return {"numerator": str(value.numerator), "denominator": str(value.denominator)}


def _surd_json(s: QuadraticSurd, digits: int) -> dict:
    return {
        "p": str(s.P),
        "d": str(s.D),
        "q": str(s.Q),
        "decimal": s.decimal(digits),
    }


def _read_cf_argument(text: str) -> str:
    if text == "-":
        return sys.stdin.read().strip()
    return text


def _cmd_expand(args: argparse.Namespace) -> int:
    cf = expand_rational(parse_rational(args.rational))
    if args.format == "plain":
        print(format_cf(cf))
    elif args.format == "csv":
        rows = [[str(n), str(a)] for n, a in enumerate(cf.coefficients)]
        print(_csv_text(["n", "coefficient"], rows))
    else:
        print(json.dumps({"type": "finite", "coefficients": [str(a) for a in cf.coefficients]}))
    return 0


def _cmd_eval(args: argparse.Namespace) -> int:
    cf = parse_cf(_read_cf_argument(args.cf))
    if isinstance(cf, PeriodicCF):
        raise InvariantError("periodic continued fractions are irrational; use from-periodic")
    value = evaluate(cf)
    if args.format == "plain":
        print(value)
    elif args.format == "csv":
        row = [str(value.numerator), str(value.denominator), decimal_string(value, args.digits)]
        print(_csv_text(["numerator", "denominator", "decimal"], [row]))
    else:
        print(json.dumps(_rational_json(value) | {"decimal": decimal_string(value, args.digits)}))
    return 0


def _cmd_convergents(args: argparse.Namespace) -> int:
    cf = parse_cf(_read_cf_argument(args.cf))
    if isinstance(cf, PeriodicCF):
        coeffs = cf.prefix(args.count)
    else:
        coeffs = cf.coefficients
    convs = convergents(coeffs, args.count)
    if args.format == "plain":
        for conv in convs:
            print(f"{conv.p}/{conv.q}")
    elif args.format == "csv":
        rows = [
            [str(c.index), str(c.p), str(c.q), decimal_string(c.value, args.digits)]
            for c in convs
        ]
        print(_csv_text(["n", "numerator", "denominator", "decimal"], rows))
    else:
        print(
            json.dumps(
                [
                    {
                        "index": c.index,
                        "numerator": str(c.p),
                        "denominator": str(c.q),
                        "decimal": decimal_string(c.value, args.digits),
                    }
                    for c in convs
                ]
            )
        )
    return 0


def _periodic_output(pcf: PeriodicCF, args: argparse.Namespace) -> int:
    if args.format == "plain":
        print(format_cf(pcf))
    elif args.format == "csv":
        rows = []
        n = 0
        for a in pcf.pre_period:
            rows.append([str(n), str(a), "pre_period"])
            n += 1
        for a in pcf.period:
            rows.append([str(n), str(a), "period"])
            n += 1
        print(_csv_text(["n", "coefficient", "part"], rows))
    else:
        print(
            json.dumps(
                {
                    "type": "periodic",
                    "pre_period": [str(a) for a in pcf.pre_period],
                    "period": [str(a) for a in pcf.period],
                }
            )
        )
    return 0


def _cmd_sqrt(args: argparse.Namespace) -> int:
    return _periodic_output(sqrt_cf(args.n, args.max_terms), args)


def _cmd_surd(args: argparse.Namespace) -> int:
    s = surd(args.P, args.D, args.Q)
    pcf = expand_surd(s, args.max_terms)
    dec = decimal_approx(s, args.digits)
    if args.format == "plain":
        print(f"{s} = {format_cf(pcf)} ≈ {dec}")
    elif args.format == "csv":
        row = [str(s.P), str(s.D), str(s.Q), format_cf(pcf), dec]
        print(_csv_text(["p", "d", "q", "cf", "decimal"], [row]))
    else:
        print(json.dumps(_surd_json(s, args.digits) | {"cf": format_cf(pcf)}))
    return 0


def _cmd_from_periodic(args: argparse.Namespace) -> int:
    cf = parse_cf(_read_cf_argument(args.cf))
    if isinstance(cf, FiniteCF):
        raise InvariantError("finite continued fractions are rational; use eval")
    s = periodic_to_surd(cf)
    dec = decimal_approx(s, args.digits)
    if args.format == "plain":
        print(f"{s} ≈ {dec}")
    elif args.format == "csv":
        row = [str(s.P), str(s.D), str(s.Q), dec]
        print(_csv_text(["p", "d", "q", "decimal"], [row]))
    else:
        print(json.dumps(_surd_json(s, args.digits)))
    return 0


def _cmd_pell(args: argparse.Namespace) -> int:
    if args.sign is None and args.count is None:
        solutions = [solve_fundamental(args.n)]
    elif args.sign == -1:
        solutions = solve_negative(args.n, args.count or 1)
    else:
        solutions = solve_positive(args.n, args.count or 1)
    if args.format == "plain":
        for sol in solutions:
            print(f"x={sol.x} y={sol.y} sign={sol.sign:+d}")
    elif args.format == "csv":
        rows = [[str(s.n), str(s.x), str(s.y), str(s.sign)] for s in solutions]
        print(_csv_text(["n", "x", "y", "sign"], rows))
    else:
        print(
            json.dumps(
                [
                    {"n": str(s.n), "x": str(s.x), "y": str(s.y), "sign": s.sign}
                    for s in solutions
                ]
            )
        )
    return 0


def _cmd_iterate(args: argparse.Namespace) -> int:
    trace = iterate_simple(args.kappa, args.terms, seed=args.seed, digits=args.digits)
    if args.format == "plain":
        for n, (term, dec) in enumerate(zip(trace.terms, trace.decimals)):
            print(f"{n}\t{term}\t{dec}")
    elif args.format == "csv":
        rows = [
            [str(n), str(t.numerator), str(t.denominator), dec]
            for n, (t, dec) in enumerate(zip(trace.terms, trace.decimals))
        ]
        print(_csv_text(["n", "numerator", "denominator", "decimal"], rows))
    else:
        print(
            json.dumps(
                {
                    "kappa": trace.kappa,
                    "seed": trace.seed,
                    "terms": [
                        {
                            "n": n,
                            "numerator": str(t.numerator),
                            "denominator": str(t.denominator),
                            "decimal": dec,
                        }
                        for n, (t, dec) in enumerate(zip(trace.terms, trace.decimals))
                    ],
                }
            )
        )
    return 0


def _cmd_monic(args: argparse.Namespace) -> int:
    trace = iterate_monic(
        parse_rational(args.b),
        parse_rational(args.c),
        parse_rational(args.x0),
        args.terms,
    )
    if args.format == "plain":
        for n, term in enumerate(trace):
            if term is POLE:
                print(f"{n}\t∞\tpole")
            else:
                print(f"{n}\t{term}\t{decimal_string(term, args.digits)}")
    elif args.format == "csv":
        rows = []
        for n, term in enumerate(trace):
            if term is POLE:
                rows.append([str(n), "", "", "inf"])
            else:
                rows.append(
                    [
                        str(n),
                        str(term.numerator),
                        str(term.denominator),
                        decimal_string(term, args.digits),
                    ]
                )
        print(_csv_text(["n", "numerator", "denominator", "decimal"], rows))
    else:
        items = []
        for n, term in enumerate(trace):
            if term is POLE:
                items.append({"n": n, "pole": True})
            else:
                items.append(
                    {
                        "n": n,
                        "numerator": str(term.numerator),
                        "denominator": str(term.denominator),
                        "decimal": decimal_string(term, args.digits),
                    }
                )
        print(json.dumps(items))
    return 0


def _ratio_decimal(cls: MonicClassification, digits: int) -> str | None:
    if cls.ratio is None:
        return None
    if isinstance(cls.ratio, Quadratic):
        as_surd = _surd_from_parts(cls.ratio.a, cls.ratio.b, Fraction(cls.ratio.d))
        return as_surd.decimal(digits)
    return decimal_string(cls.ratio, digits)


def _cmd_classify(args: argparse.Namespace) -> int:
    cls = classify_monic(parse_rational(args.b), parse_rational(args.c))
    ratio_dec = _ratio_decimal(cls, args.digits)
    if args.format == "plain":
        parts = [f"verdict={cls.verdict}", f"discriminant={cls.discriminant}"]
        if cls.root is not None:
            parts.append(f"root={cls.root}")
        if ratio_dec is not None:
            parts.append(f"ratio≈{ratio_dec}")
        print(" ".join(parts))
    elif args.format == "csv":
        row = [
            str(cls.verdict),
            str(cls.discriminant),
            "" if cls.root is None else str(cls.root),
            "" if ratio_dec is None else ratio_dec,
        ]
        print(_csv_text(["verdict", "discriminant", "root", "ratio"], [row]))
    else:
        payload: dict = {
            "verdict": str(cls.verdict),
            "b": _rational_json(cls.b),
            "c": _rational_json(cls.c),
            "discriminant": _rational_json(cls.discriminant),
        }
        if cls.root is not None:
            if isinstance(cls.root, QuadraticSurd):
                payload["root"] = _surd_json(cls.root, args.digits)
            else:
                payload["root"] = _rational_json(cls.root)
        if cls.ratio is not None:
            payload["ratio"] = {"decimal": ratio_dec}
            if isinstance(cls.ratio, Quadratic):
                payload["ratio"] |= {
                    "a": _rational_json(cls.ratio.a),
                    "b": _rational_json(cls.ratio.b),
                    "d": str(cls.ratio.d),
                }
            else:
                payload["ratio"] |= _rational_json(cls.ratio)
        print(json.dumps(payload))
    return 0


def _cmd_report(args: argparse.Namespace) -> int:
    written = generate_report(
        Path(args.outdir),
        kappas=tuple(args.kappa),
        terms=args.terms,
        seed=args.seed,
        digits=args.digits,
    )
    for path in written:
        print(path)
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--digits", type=int, default=3, help="decimal display precision (default 3)"
    )
    common.add_argument(
        "--format", choices=("plain", "csv", "json"), default="plain", help="output format"
    )

    parser = argparse.ArgumentParser(
        prog="contfrac",
        description="Exact continued fraction toolkit: rationals, quadratic surds, "
        "Pell's equation, fixed-point iteration.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", parents=[common], help="continued fraction of a rational p/q")
    p.add_argument("rational", help="rational number, e.g. 47/17 or -47/17")
    # Let a leading-dash rational like -47/17 count as a positional.
    p._negative_number_matcher = re.compile(r"^-\d+(/-?\d+)?$")
    p.set_defaults(func=_cmd_expand)

    p = sub.add_parser("eval", parents=[common], help="exact value of a finite CF")
    p.add_argument("cf", help="bracket notation, e.g. \"[2;1,3,4]\" ('-' reads stdin)")
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("convergents", parents=[common], help="convergents of a CF")
    p.add_argument("cf", help="finite or periodic bracket notation")
    p.add_argument("--count", type=int, required=True, help="number of convergents")
    p.set_defaults(func=_cmd_convergents)

    p = sub.add_parser("sqrt", parents=[common], help="periodic CF of sqrt(n)")
    p.add_argument("n", type=int)
    p.add_argument("--max-terms", type=int, default=DEFAULT_EXPANSION_BUDGET)
    p.set_defaults(func=_cmd_sqrt)

    p = sub.add_parser("surd", parents=[common], help="expand (P + sqrt(D))/Q")
    p.add_argument("P", type=int)
    p.add_argument("D", type=int)
    p.add_argument("Q", type=int)
    p.add_argument("--max-terms", type=int, default=DEFAULT_EXPANSION_BUDGET)
    p.set_defaults(func=_cmd_surd)

    p = sub.add_parser(
        "from-periodic", parents=[common], help="quadratic surd of a periodic CF"
    )
    p.add_argument("cf", help="periodic bracket notation, e.g. \"[1;(2)]\" ('-' reads stdin)")
    p.set_defaults(func=_cmd_from_periodic)

    p = sub.add_parser("pell", parents=[common], help="solve x² - n·y² = ±1")
    p.add_argument("n", type=int)
    p.add_argument("--count", type=int, default=None, help="number of solutions to list")
    p.add_argument(
        "--sign",
        type=int,
        choices=(1, -1),
        default=None,
        help="restrict to +1 or -1 solutions (write --sign=-1)",
    )
    p.set_defaults(func=_cmd_pell)

    p = sub.add_parser("iterate", parents=[common], help="trace t(n+1) = kappa + 1/t(n)")
    p.add_argument("--kappa", type=int, required=True)
    p.add_argument("--terms", type=int, required=True)
    p.add_argument("--seed", choices=("recurrence", "paper"), default="recurrence")
    p.set_defaults(func=_cmd_iterate)

    p = sub.add_parser("monic", parents=[common], help="trace x(k+1) = -b - c/x(k)")
    p.add_argument("--b", required=True, help="rational, e.g. -1 or 3/2 (write --b=-1)")
    p.add_argument("--c", required=True)
    p.add_argument("--x0", required=True)
    p.add_argument("--terms", type=int, required=True)
    p.set_defaults(func=_cmd_monic)

    p = sub.add_parser(
        "classify", parents=[common], help="convergence class of x² + bx + c = 0"
    )
    p.add_argument("--b", required=True)
    p.add_argument("--c", required=True)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser(
        "report", parents=[common], help="write trace CSVs and convergence figures"
    )
    p.add_argument("--outdir", required=True)
    p.add_argument(
        "--kappa", type=int, action="append", default=None, help="repeatable; default 1 and 2"
    )
    p.add_argument("--terms", type=int, default=11)
    p.add_argument("--seed", choices=("recurrence", "paper"), default="paper")
    p.set_defaults(func=_cmd_report)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "command", None) == "report" and args.kappa is None:
        args.kappa = [1, 2]
    try:
        return args.func(args)
    except PeriodNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except (CFSyntaxError, InvariantError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ContfracError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    sys.exit(main())
