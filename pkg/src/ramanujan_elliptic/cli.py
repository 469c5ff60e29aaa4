"""Command-line front end.

    python -m ramanujan_elliptic series P --order 10
    python -m ramanujan_elliptic verify all --json
    python -m ramanujan_elliptic eval --fn S --y 2 --theta 3.14159265
    python -m ramanujan_elliptic invert --level 4 --x 0.5

Exit status: 0 on success, 1 on a failed check or a domain error, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import math
import sys
from concurrent.futures import ProcessPoolExecutor, as_completed
from typing import Sequence

from . import elliptic_f as ef
from . import jacobi_fourier as jf
from . import theta
from .hyper2f1 import HALF, THIRD, hyp2f1_taylor
from .inversion import q_of_x
from .qseries import QSeries, eisenstein_series
from .report import VerificationReport
from .suites import SUITES, SuiteOptions, default_tol, run_suite

SERIES_NAMES = ("P", "Q", "R", "theta3", "cubic_a", "x4", "x3", "2f1_half", "2f1_third")
EVAL_FUNCTIONS = ("S", "C", "C1", "f", "theta3", "cubic_a", "x4", "x3")


def build_series(name: str, order: int) -> QSeries:
    if name in ("P", "Q", "R"):
        return eisenstein_series(name, order)
    if name in ("theta3", "cubic_a"):
        return theta.theta_series(name, order)
    if name == "x4":
        return theta.x_series(4, order)
    if name == "x3":
        return theta.x_series(3, order)
    if name == "2f1_half":
        return QSeries(hyp2f1_taylor(HALF, order))
    if name == "2f1_third":
        return QSeries(hyp2f1_taylor(THIRD, order))
    raise ValueError(f"unknown series {name!r}")


def format_number(v: complex | float) -> str:
    """12 significant digits; complex values as re+imi."""
    v = complex(v)
    if v.imag == 0:
        return f"{v.real:.12g}"
    return f"{v.real:.12g}{v.imag:+.12g}i"


def parse_theta(text: str) -> complex:
    try:
        return complex(text.replace(" ", "").replace("i", "j"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"cannot parse theta {text!r}; use re, re+imi or re-imi") from None


def _positive_float(text: str) -> float:
    v = float(text)
    if not v > 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def _make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ramanujan-elliptic", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("series", help="print exact q-series coefficients")
    s.add_argument("name", choices=SERIES_NAMES)
    s.add_argument("--order", type=int, required=True)
    s.add_argument("--format", choices=("text", "json"), default="text")

    v = sub.add_parser("verify", help="run a named verification suite")
    v.add_argument("suite", choices=tuple(SUITES) + ("all",))
    v.add_argument("--order", type=int, default=None)
    v.add_argument("--tol", type=_positive_float, default=None)
    v.add_argument("--json", action="store_true", help="one JSON object per report line")
    v.add_argument("--serial", action="store_true", help="run suites one after another in fixed order")
    v.add_argument("--no-timing", action="store_true", help="report runtime_ms as 0 for byte-stable output")

    e = sub.add_parser("eval", help="evaluate a function numerically")
    e.add_argument("--fn", choices=EVAL_FUNCTIONS, required=True)
    nome = e.add_mutually_exclusive_group(required=True)
    nome.add_argument("--q", type=float)
    nome.add_argument("--y", type=float)
    e.add_argument("--theta", type=parse_theta, default=None)
    e.add_argument("--tol", type=_positive_float, default=None)

    i = sub.add_parser("invert", help="nome q from the modulus x")
    i.add_argument("--level", type=int, choices=(3, 4), required=True)
    i.add_argument("--x", type=float, required=True)
    i.add_argument("--tol", type=_positive_float, default=1e-13)
    return p


def _cmd_series(args, parser) -> int:
    minimum = 1 if args.name in ("x4", "x3") else 0
    if args.order < minimum:
        parser.error(f"--order must be >= {minimum} for {args.name}")
    s = build_series(args.name, args.order)
    if args.format == "json":
        print(s.to_json())
    else:
        sys.stdout.write(s.to_text())
    return 0


def _emit(reports: Sequence[VerificationReport], as_json: bool, no_timing: bool) -> bool:
    ok = True
    for r in reports:
        if no_timing:
            r.runtime_ms = 0
        print(r.to_json() if as_json else r.summary(), flush=True)
        ok = ok and r.passed
    return ok


def _cmd_verify(args) -> int:
    opts = SuiteOptions(order=args.order, tol=args.tol)
    names = list(SUITES) if args.suite == "all" else [args.suite]
    ok = True
    if args.serial or len(names) == 1:
        for name in names:
            ok = _emit(run_suite(name, opts), args.json, args.no_timing) and ok
    else:
        with ProcessPoolExecutor() as pool:
            futures = [pool.submit(run_suite, name, opts) for name in names]
            # suites stream as they finish; each line is written whole
            for fut in as_completed(futures):
                ok = _emit(fut.result(), args.json, args.no_timing) and ok
    return 0 if ok else 1


def _cmd_eval(args) -> int:
    tol = args.tol if args.tol is not None else default_tol()
    fn = args.fn
    th = args.theta
    if fn in ("S", "C", "C1"):
        if args.y is not None:
            y = args.y
        else:
            if not 0 < args.q < 1:
                raise ValueError("nome out of range")
            y = -math.log(args.q)
        val = jf.jacobi_eval(fn, 0.0 if th is None else th, jf.JacobiContext(y), tol)
    elif fn == "f":
        q = args.q if args.q is not None else math.exp(-args.y)
        if th is None:
            raise ValueError("--theta is required for f")
        ctx = ef.FContext(q)
        if abs(th.imag) < ctx.strip:
            val = ef.f_strip(th, ctx, tol)
        else:
            val = ef.f_mero(th, ctx, tol)
    else:
        q = args.q if args.q is not None else math.exp(-args.y)
        if fn in ("theta3", "cubic_a"):
            val = theta.theta_num(fn, q, tol)
        else:
            val = theta.x_num(4 if fn == "x4" else 3, q, tol)
    print(f"{format_number(val)}\ttol={tol:g}")
    return 0


def _cmd_invert(args) -> int:
    val = q_of_x(args.level, args.x, args.tol)
    print(f"{format_number(val)}\ttol={args.tol:g}")
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    parser = _make_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "series":
            return _cmd_series(args, parser)
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "eval":
            return _cmd_eval(args)
        return _cmd_invert(args)
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except BrokenPipeError:
        # downstream closed early (e.g. piped into head)
        sys.stderr.close()
        return 0


if __name__ == "__main__":
    sys.exit(main())
