"""Named verification suites with the default parameters of the acceptance gate."""

from __future__ import annotations

import os
import time
from dataclasses import dataclass
from typing import Callable, Optional

from . import elliptic_f as ef
from . import inversion as inv
from . import jacobi_fourier as jf
from .qseries import ode_residuals
from .report import VerificationReport, stamp
from .theta import x_num
from .trig_identity import eq1_residual

GLOBAL_TOL = 1e-10


def default_tol() -> float:
    """Global numeric tolerance, overridable with ELLIPTIC_DEFAULT_TOL."""
    raw = os.environ.get("ELLIPTIC_DEFAULT_TOL")
    if raw is None:
        return GLOBAL_TOL
    val = float(raw)
    if not val > 0:
        raise ValueError("ELLIPTIC_DEFAULT_TOL must be positive")
    return val


@dataclass
class SuiteOptions:
    order: Optional[int] = None
    tol: Optional[float] = None


def _pick(value, default):
    return default if value is None else value


def _grid(start: float, step: float, count: int) -> list[float]:
    return [round(start + step * i, 12) for i in range(count)]


ROUNDTRIP_GRID = {4: _grid(0.001, 0.01, 26), 3: _grid(0.001, 0.01, 21)}
MONOTONE_GRID = {4: (0.001, 0.9), 3: (0.001, 0.6)}
F_NOMES = (0.01, 0.05, 0.1)
OVERLAP_NOMES = (0.02, 0.05, 0.1)
EQ1_REAL_THETAS = (0.7, 1.0, 1.3, 2.9)
EQ1_COMPLEX_THETAS = (1.0 + 0.5j, 2.0 - 0.4j, 2.9 + 0.8j)
JACOBI_YS = (0.5, 1.0, 2.0)
PYTHAGOREAN_FIT = (0.7, 2.1)
PYTHAGOREAN_REFIT = (0.4, 1.9)


def linspace(lo: float, hi: float, points: int) -> list[float]:
    """``points`` equally spaced values from lo to hi, both ends included."""
    step = (hi - lo) / (points - 1)
    return [lo + step * i for i in range(points)]


def eq1_exact(opts: SuiteOptions) -> list[VerificationReport]:
    t0 = time.perf_counter()
    order = _pick(opts.order, 30)
    res = eq1_residual(order)
    rep = VerificationReport.exact(
        "eq1-exact", res.max_abs_coeff(), order=order, harmonic_bound=res.harmonic_bound,
        components=res.harmonic_bound + 2,
    )
    return [stamp(rep, t0)]


def eq1_numeric(opts: SuiteOptions) -> list[VerificationReport]:
    out = []
    tol_real = _pick(opts.tol, default_tol())
    tol_cplx = _pick(opts.tol, 1e-9)
    for q in OVERLAP_NOMES:
        ctx = ef.FContext(q)
        t0 = time.perf_counter()
        worst = max(abs(a - b) for a, b in (ef.eq1_sides(t, ctx) for t in EQ1_REAL_THETAS))
        out.append(stamp(VerificationReport.numeric(
            "eq1-numeric-real", worst, tol_real, q=q, thetas=list(EQ1_REAL_THETAS)), t0))
        t0 = time.perf_counter()
        worst = max(abs(a - b) for a, b in (ef.eq1_sides(t, ctx) for t in EQ1_COMPLEX_THETAS))
        out.append(stamp(VerificationReport.numeric(
            "eq1-numeric-complex", worst, tol_cplx, q=q,
            thetas=[[t.real, t.imag] for t in EQ1_COMPLEX_THETAS]), t0))
        out.append(ef.overlap_check(ctx, ef.random_strip_points(ctx, 20, seed=int(q * 1000)), 1e-11))
    return out


def eisenstein_ode(opts: SuiteOptions) -> list[VerificationReport]:
    t0 = time.perf_counter()
    order = _pick(opts.order, 500)
    res = ode_residuals(order)
    worst = max(r.max_abs_coeff() for r in res)
    rep = VerificationReport.exact("eisenstein-ode", worst, order=order, equations=3)
    return [stamp(rep, t0)]


def _inversion(level: int, opts: SuiteOptions) -> list[VerificationReport]:
    reports = [
        inv.roundtrip_check(level, ROUNDTRIP_GRID[level], _pick(opts.tol, 1e-8)),
        inv.symmetry_point_check(level, 1e-9),
    ]
    t0 = time.perf_counter()
    xs = (0.1, 0.3, 0.5, 0.7)
    worst = max(abs(x_num(level, inv.q_of_x(level, x)) - x) for x in xs)
    reports.append(stamp(VerificationReport.numeric(
        f"inverse-roundtrip-level{level}", worst, 1e-7, level=level, xs=list(xs)), t0))
    t0 = time.perf_counter()
    c2 = inv.LEVELS[level].constant ** 2
    xs = (0.2, 0.35, 0.5)
    worst = max(abs(inv.reflection_product(level, x) - c2) for x in xs)
    reports.append(stamp(VerificationReport.numeric(
        f"reflection-level{level}", worst, 1e-7, level=level, xs=list(xs)), t0))
    return reports


def inversion_level4(opts: SuiteOptions) -> list[VerificationReport]:
    return _inversion(4, opts)


def inversion_level3(opts: SuiteOptions) -> list[VerificationReport]:
    return _inversion(3, opts)


def moreover_num(opts: SuiteOptions) -> list[VerificationReport]:
    tol = _pick(opts.tol, 1e-9)
    return [inv.moreover_check_num(level, q, tol) for level in (4, 3) for q in (0.01, 0.05, 0.1)]


def moreover_exact(opts: SuiteOptions) -> list[VerificationReport]:
    order = _pick(opts.order, 60)
    return [inv.moreover_check_exact(level, order) for level in (4, 3)]


def monotonic(opts: SuiteOptions) -> list[VerificationReport]:
    return [
        inv.monotonicity_scan(level, linspace(*MONOTONE_GRID[level], 1000))
        for level in (4, 3)
    ]


def jacobian_deriv(opts: SuiteOptions) -> list[VerificationReport]:
    tol = _pick(opts.tol, default_tol())
    return [jf.derivative_identity_check(jf.JacobiContext(y), jf.real_grid(64), tol) for y in JACOBI_YS]


def pythagorean(opts: SuiteOptions) -> list[VerificationReport]:
    ctx = jf.JacobiContext(2.0)
    return [
        jf.pythagorean_probe(ctx, PYTHAGOREAN_FIT, jf.real_grid(64), _pick(opts.tol, 1e-9)),
        jf.refit_stability(ctx, PYTHAGOREAN_FIT, PYTHAGOREAN_REFIT, 1e-8),
    ]


def quasi_period(opts: SuiteOptions) -> list[VerificationReport]:
    tol = _pick(opts.tol, default_tol())
    return [ef.quasi_period_check(ef.FContext(q), ef.off_pole_grid(32), tol) for q in F_NOMES]


def fprime_elliptic(opts: SuiteOptions) -> list[VerificationReport]:
    tol = _pick(opts.tol, default_tol())
    return [ef.fprime_elliptic_check(ef.FContext(q), ef.off_pole_grid(32), tol) for q in F_NOMES]


SUITES: dict[str, Callable[[SuiteOptions], list[VerificationReport]]] = {
    "eq1-exact": eq1_exact,
    "eq1-numeric": eq1_numeric,
    "eisenstein-ode": eisenstein_ode,
    "inversion-level4": inversion_level4,
    "inversion-level3": inversion_level3,
    "moreover-num": moreover_num,
    "moreover-exact": moreover_exact,
    "monotonic": monotonic,
    "jacobian-deriv": jacobian_deriv,
    "pythagorean": pythagorean,
    "quasi-period": quasi_period,
    "fprime-elliptic": fprime_elliptic,
}


def run_suite(name: str, opts: Optional[SuiteOptions] = None) -> list[VerificationReport]:
    opts = opts or SuiteOptions()
    try:
        fn = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}") from None
    return fn(opts)
