"""Command-line front end.

Commands:
  eval series K Z      evaluate the inverse binomial series S_K(Z)
  eval li S Z          polylogarithm Li_S(Z), optional --side upper|lower
  eval gpl LETTERS Z   G-function with comma-separated letters
  eval const NAME      a named constant
  const NAME           alias of `eval const`
  verify ID|all        check catalog identities
  list                 catalog ids with anchors

Number grammar: `a/b` exact rational, integers, decimals, `x+yi` complex
decimals (parsed at the working precision), and `exp(i*pi*p/q)` points.

Exit codes: 0 success / all pass, 1 verification failure, 2 parse or
lookup error, 3 evaluation error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import re
import sys

from mpmath import mp

from . import __version__
from .catalog import builtin_catalog
from .constants import NamedConstant, named_constant
from .polylog import GplWord, gpl_eval, li
from .precision import ApComplex, EvaluationError, PrecisionCtx
from .series import SeriesSpec, s_series
from .verify import report_row, verify, verify_all

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_EVAL = 3

_RATIONAL_RE = re.compile(r"[+-]?\d+(?:/\d+)?\Z")
_EXP_RE = re.compile(r"exp\(i\*pi(?:\*([+-]?\d+))?(?:/(\d+))?\)\Z")
_DECIMAL = r"[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?"
_COMPLEX_RE = re.compile(
    rf"(?P<re>{_DECIMAL})?(?P<im>[+-](?:\d+\.?\d*|\.\d+)?(?:[eE][+-]?\d+)?|)i\Z"
)


def parse_number(text: str):
    """Parse the CLI number grammar; assumes the working precision is set.

    Returns a Fraction for exact rational input, else an mpc/mpf.
    """
    from fractions import Fraction

    text = text.strip().replace(" ", "")
    if not text:
        raise ValueError("empty number")
    if _RATIONAL_RE.match(text):
        return Fraction(text)
    m = _EXP_RE.match(text)
    if m:
        p = int(m.group(1)) if m.group(1) else 1
        qden = int(m.group(2)) if m.group(2) else 1
        return mp.expjpi(mp.mpf(p) / qden)
    if text in ("i", "+i"):
        return mp.mpc(0, 1)
    if text == "-i":
        return mp.mpc(0, -1)
    m = _COMPLEX_RE.match(text)
    if m:
        re_part = mp.mpf(m.group("re")) if m.group("re") else mp.mpf(0)
        im_text = m.group("im")
        if im_text in ("", "+"):
            im_part = mp.mpf(1)
        elif im_text == "-":
            im_part = mp.mpf(-1)
        else:
            im_part = mp.mpf(im_text)
        return mp.mpc(re_part, im_part)
    try:
        return mp.mpf(text)
    except ValueError:
        raise ValueError(f"cannot parse number {text!r}") from None


def _format(value: ApComplex) -> str:
    return str(value)


def _catalog_hash() -> str:
    payload = "\n".join(
        repr((e.id, e.lhs, e.rhs, e.weight, e.level, e.anchor, e.min_digits))
        for e in builtin_catalog()
    )
    return hashlib.sha256(payload.encode()).hexdigest()[:16]


def _cmd_eval(args, ctx: PrecisionCtx) -> int:
    try:
        with ctx.working():
            if args.kind == "series":
                k = int(args.args[0])
                z = parse_number(args.args[1])
                value = s_series(SeriesSpec(k, z), ctx)
            elif args.kind == "li":
                s = int(args.args[0])
                z = parse_number(args.args[1])
                value = li(s, z, args.side, ctx)
            elif args.kind == "gpl":
                letters = tuple(parse_number(t) for t in args.args[0].split(","))
                z = parse_number(args.args[1])
                value = gpl_eval(GplWord(letters, z), ctx)
            else:  # const
                value = named_constant(NamedConstant(args.args[0]), ctx)
    except (ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except EvaluationError as exc:
        print(f"evaluation error: {exc}", file=sys.stderr)
        return EXIT_EVAL
    print(_format(value))
    return EXIT_OK


def _cmd_verify(args, ctx: PrecisionCtx) -> int:
    if args.id == "all":
        reports = verify_all(ctx, workers=args.jobs)
    else:
        table = {e.id: e for e in builtin_catalog()}
        if args.id not in table:
            print(f"error: unknown identity id {args.id!r} (see `list`)", file=sys.stderr)
            return EXIT_USAGE
        reports = [verify(table[args.id], ctx)]

    width = max(len(r.id) for r in reports)
    for r in reports:
        print(
            f"{r.id:<{width}}  {r.status:<5}  digits={r.digits_agreed:7.2f}  "
            f"[{r.elapsed_ms:8.1f} ms]  {r.anchor}"
        )
    n_pass = sum(r.status == "pass" for r in reports)
    print(f"{n_pass}/{len(reports)} pass at {ctx.digits} digits")

    if args.json:
        payload = {
            "metadata": {
                "tool_version": __version__,
                "digits": ctx.digits,
                "catalog_hash": _catalog_hash(),
                "elapsed_ms": {r.id: round(r.elapsed_ms, 3) for r in reports},
            },
            "reports": [report_row(r) for r in reports],
        }
        with open(args.json, "w") as fh:
            json.dump(payload, fh, indent=2, sort_keys=True)
            fh.write("\n")

    if any(r.status == "error" for r in reports):
        return EXIT_EVAL
    if any(r.status == "fail" for r in reports):
        return EXIT_FAIL
    return EXIT_OK


def _cmd_list() -> int:
    for e in builtin_catalog():
        level = "-" if e.level is None else str(e.level)
        print(f"{e.id:15s} w={e.weight} N={level:>2s}  {e.anchor}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--digits", type=int, default=40,
                        help="reported digits (default 40)")
    common.add_argument("--jobs", type=int, default=os.cpu_count() or 1,
                        help="parallel workers for `verify all`")
    common.add_argument("--json", metavar="PATH", help="write a structured report")

    parser = argparse.ArgumentParser(
        prog="invbinom",
        description="arbitrary-precision inverse binomial series and polylogarithm toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", parents=[common],
                            help="evaluate a series, polylog, G-function, or constant")
    p_eval.add_argument("kind", choices=["series", "li", "gpl", "const"])
    p_eval.add_argument("args", nargs="+")
    p_eval.add_argument("--side", choices=["auto", "upper", "lower"], default="auto")

    p_const = sub.add_parser("const", parents=[common], help="evaluate a named constant")
    p_const.add_argument("name")

    p_verify = sub.add_parser("verify", parents=[common], help="verify catalog identities")
    p_verify.add_argument("id", help="catalog id or 'all'")

    sub.add_parser("list", parents=[common], help="list catalog ids and anchors")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.digits < 10:
        print("error: --digits must be >= 10", file=sys.stderr)
        return EXIT_USAGE
    if args.jobs < 1:
        print("error: --jobs must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    ctx = PrecisionCtx(args.digits)
    if args.command == "eval":
        return _cmd_eval(args, ctx)
    if args.command == "const":
        args.kind = "const"
        args.args = [args.name]
        return _cmd_eval(args, ctx)
    if args.command == "verify":
        return _cmd_verify(args, ctx)
    if args.command == "list":
        return _cmd_list()
    return EXIT_USAGE  # pragma: no cover


if __name__ == "__main__":
    sys.exit(main())
