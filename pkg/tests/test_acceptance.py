"""End-to-end acceptance checks, one test per criterion.

Each test records a ``PASS``/``FAIL criterion N: ...`` line; the lines are
printed in the pytest terminal summary (see conftest.py) and also when the
module is run directly with ``python tests/test_acceptance.py``.
"""

import math
import time

import pytest

from ramanujan_elliptic import elliptic_f as ef
from ramanujan_elliptic import inversion as inv
from ramanujan_elliptic import jacobi_fourier as jf
from ramanujan_elliptic.qseries import ode_residuals
from ramanujan_elliptic.suites import linspace
from ramanujan_elliptic.trig_identity import eq1_residual

RESULTS: dict[int, str] = {}


def record(n, ok, detail):
    RESULTS[n] = f"{'PASS' if ok else 'FAIL'} criterion {n}: {detail}"
    assert ok, RESULTS[n]


def timed(fn, *args):
    t0 = time.perf_counter()
    out = fn(*args)
    return out, time.perf_counter() - t0


def test_criterion_01_trig_identity_exact():
    res, dt = timed(eq1_residual, 30)
    ok = res.is_zero() and res.harmonic_bound == 60 and dt < 60
    record(1, ok, f"squared identity order 30, cot^2 and cos k (k<=60) all zero={res.is_zero()}, {dt:.2f}s < 60s")


def test_criterion_02_eisenstein_ode():
    res, dt = timed(ode_residuals, 500)
    zero = all(r.is_zero() for r in res)
    record(2, zero and len(res) == 3 and dt < 10, f"three ODE residuals at order 500 zero={zero}, {dt:.2f}s < 10s")


@pytest.mark.parametrize("n, level", [(3, 4), (4, 3)])
def test_criteria_03_04_hypergeometric_exact(n, level):
    res, dt = timed(inv.moreover_series_residual, level, 60)
    record(n, res.is_zero() and dt < 30, f"level-{level} 2F1(x) minus theta power through q^60 zero={res.is_zero()}, {dt:.2f}s < 30s")


@pytest.mark.parametrize("n, level, count", [(5, 4, 26), (6, 3, 21)])
def test_criteria_05_06_roundtrip(n, level, count):
    grid = [0.001 + 0.01 * i for i in range(count)]
    rep = inv.roundtrip_check(level, grid, 1e-8)
    record(n, rep.passed, f"level-{level} roundtrip over q in [0.001, {grid[-1]:.3f}] max err {rep.max_abs_residual:.2e} <= 1e-8")


def test_criterion_07_symmetry_points():
    e4 = abs(inv.q_of_x(4, 0.5) - math.exp(-math.pi))
    e3 = abs(inv.q_of_x(3, 0.5) - math.exp(-2 * math.pi / math.sqrt(3)))
    record(7, e4 <= 1e-9 and e3 <= 1e-9, f"symmetry points errors {e4:.2e} (level 4), {e3:.2e} (level 3) <= 1e-9")


def test_criterion_08_monotonicity():
    r4 = inv.monotonicity_scan(4, linspace(0.001, 0.9, 1000))
    r3 = inv.monotonicity_scan(3, linspace(0.001, 0.6, 1000))
    record(8, r4.passed and r3.passed, f"strictly increasing on 1000-point grids: x4={r4.passed}, x3={r3.passed}")


def test_criterion_09_derivative_formulas():
    worst = 0.0
    for y in (0.5, 1.0, 2.0):
        rep = jf.derivative_identity_check(jf.JacobiContext(y), jf.real_grid(64), 1e-10)
        worst = max(worst, rep.max_abs_residual)
    record(9, worst <= 1e-10, f"S', C', C1' identities over 64 points, y in (0.5, 1, 2): max {worst:.2e} <= 1e-10")


def test_criterion_10_pythagorean():
    ctx = jf.JacobiContext(2.0)
    probe = jf.pythagorean_probe(ctx, (0.7, 2.1), jf.real_grid(64), 1e-9)
    refit = jf.refit_stability(ctx, (0.7, 2.1), (0.4, 1.9), 1e-8)
    ok = probe.passed and refit.passed
    record(10, ok, f"fit residual {probe.max_abs_residual:.2e} <= 1e-9, refit drift {refit.max_abs_residual:.2e} <= 1e-8")


def test_criterion_11_quasi_periodicity():
    grid = ef.off_pole_grid(32)
    qp = max(ef.quasi_period_check(ef.FContext(q), grid, 1e-10).max_abs_residual for q in (0.01, 0.05, 0.1))
    fp = max(ef.fprime_elliptic_check(ef.FContext(q), grid, 1e-10).max_abs_residual for q in (0.01, 0.05, 0.1))
    record(11, qp <= 1e-10 and fp <= 1e-10, f"quasi-period jump {qp:.2e}, f' periods {fp:.2e}, both <= 1e-10")


def test_criterion_12_continuation():
    overlap = real = cplx = 0.0
    for q in (0.02, 0.05, 0.1):
        ctx = ef.FContext(q)
        pts = ef.random_strip_points(ctx, 20, seed=int(q * 1000))
        overlap = max(overlap, ef.overlap_check(ctx, pts, 1e-11).max_abs_residual)
        for t in (0.5, 1.0, 2.0, 3.0, 4.5):
            lhs, rhs = ef.eq1_sides(t, ctx)
            real = max(real, abs(lhs - rhs))
        for t in pts:
            lhs, rhs = ef.eq1_sides(t, ctx)
            cplx = max(cplx, abs(lhs - rhs))
    ok = overlap <= 1e-11 and real <= 1e-10 and cplx <= 1e-9
    record(12, ok, f"strip vs continuation {overlap:.2e} <= 1e-11, identity real {real:.2e} <= 1e-10, complex {cplx:.2e} <= 1e-9")


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
