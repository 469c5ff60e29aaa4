"""The function f(t) = cot(t/2)/4 + sum q^n/(1-q^n) sin(n t) and its continuation.

With z = e^{it}, expanding q^n/(1-q^n) geometrically and summing over n gives

    f = (i/4)(z+1)/(z-1) - (i/2) sum_{m>=1} [q^m z/(1 - q^m z) - q^m/(z - q^m)],

which converges for every z away from the poles z = q^k (k in Z), i.e. for t
off the lattice 2 pi m + 2 pi n tau. The shift t -> t + 2 pi tau is z -> q z.
"""

from __future__ import annotations

import cmath
import math
import time
from dataclasses import dataclass
from typing import Sequence

from .report import VerificationReport, stamp

POLE_GUARD = 1e-8


class PoleError(ValueError):
    pass


@dataclass(frozen=True)
class FContext:
    """Nome q (|q| < 1; q = 0 allowed as the degenerate limit)."""

    q: complex

    def __post_init__(self):
        if not abs(self.q) < 1:
            raise ValueError("nome out of range")

    @classmethod
    def from_tau(cls, tau: complex) -> "FContext":
        if tau.imag <= 0:
            raise ValueError("tau must lie in the upper half-plane")
        return cls(cmath.exp(2j * math.pi * tau))

    @property
    def tau(self) -> complex:
        if self.q == 0:
            return complex(0, math.inf)
        return cmath.log(self.q) / (2j * math.pi)

    @property
    def strip(self) -> float:
        """Half-width of the strip |Im t| < 2 pi Im tau = -ln|q|."""
        if self.q == 0:
            return math.inf
        return -math.log(abs(self.q))


def _cot_half(theta: complex) -> complex:
    return cmath.cos(theta / 2) / cmath.sin(theta / 2)


def f_strip(theta: complex, ctx: FContext, tol: float = 1e-16) -> complex:
    """Direct Fourier-Lambert sum inside the strip.

    |q^n/(1-q^n) sin(n t)| <= |q|^n e^{n s} / (1 - |q|) with s = |Im t|, so the
    tail after n is the next such bound over 1 - |q| e^s.
    """
    theta = complex(theta)
    s = abs(theta.imag)
    if s >= ctx.strip:
        raise ValueError("outside convergence strip")
    if abs(cmath.exp(1j * theta) - 1) < POLE_GUARD:
        raise PoleError("pole of f")
    total = 0.25 * _cot_half(theta)
    q = ctx.q
    if q == 0:
        return total
    aq = abs(q)
    rho = aq * math.exp(s)
    scale = 1.0 / (1.0 - aq)
    qn = 1.0 + 0j
    n = 0
    while True:
        n += 1
        qn *= q
        total += qn / (1 - qn) * cmath.sin(n * theta)
        if scale * rho ** (n + 1) / (1.0 - rho) < tol:
            return total


def _lattice_guard(z: complex, q: complex, m_max: int) -> None:
    if abs(z - 1) < POLE_GUARD:
        raise PoleError("pole of f")
    qm = 1.0 + 0j
    for _ in range(m_max):
        qm *= q
        # poles at z = q^m and z = q^-m
        if abs(z - qm) < POLE_GUARD * abs(qm) or abs(z * qm - 1) < POLE_GUARD:
            raise PoleError("pole of f")


def _mero_cutoff(z: complex, q: complex, tol: float) -> int:
    """Smallest M such that terms m > M sum below tol.

    Once |q|^m |z| <= 1/2 and |q|^m <= |z|/2 each bracket is at most
    2|q|^m (|z| + 1/|z|), giving a geometric tail.
    """
    aq, az = abs(q), abs(z)
    if aq == 0:
        return 0
    c = 2.0 * (az + 1.0 / az) / (1.0 - aq)
    m = 1
    while True:
        qm = aq ** m
        if qm * az <= 0.5 and qm <= az / 2 and c * qm * aq < tol:
            return m
        m += 1


def f_mero(theta: complex, ctx: FContext, tol: float = 1e-16) -> complex:
    """Meromorphic continuation of f to all t off the lattice."""
    return _f_mero_z(cmath.exp(1j * complex(theta)), ctx.q, tol)


def _f_mero_z(z: complex, q: complex, tol: float) -> complex:
    M = _mero_cutoff(z, q, tol)
    _lattice_guard(z, q, M)
    total = 0.25j * (z + 1) / (z - 1)
    acc = 0j
    qm = 1.0 + 0j
    for _ in range(M):
        qm *= q
        acc += qm * z / (1 - qm * z) - qm / (z - qm)
    return total - 0.5j * acc


def fprime_mero(theta: complex, ctx: FContext, tol: float = 1e-16) -> complex:
    """Exact t-derivative of the continued f (d/dt = i z d/dz)."""
    return _fprime_z(cmath.exp(1j * complex(theta)), ctx.q, tol)


def _fprime_z(z: complex, q: complex, tol: float) -> complex:
    # squared denominators double the bracket bound, and the prefactor is |z|/2
    M = _mero_cutoff(z, q, tol / (2.0 * max(1.0, abs(z), 1.0 / abs(z))))
    _lattice_guard(z, q, M)
    acc = 0j
    qm = 1.0 + 0j
    for _ in range(M):
        qm *= q
        acc += qm / (1 - qm * z) ** 2 + qm / (z - qm) ** 2
    return z / (2 * (z - 1) ** 2) + 0.5 * z * acc


def residue_limit(ctx: FContext, steps: Sequence[float] = (0.1, 0.01, 0.001)) -> float:
    """Richardson-extrapolated limit of t f(t) as t -> 0 (expected 1/2).

    t f(t) = 1/2 + O(t^2) near 0, so steps shrinking by 10 are combined with
    weights for an error in t^2.
    """
    vals = [(h * f_mero(h, ctx)).real for h in steps]
    return _richardson_sq(steps, vals)


def double_pole_limit(ctx: FContext, steps: Sequence[float] = (0.1, 0.01, 0.001)) -> float:
    """Extrapolated limit of t^2 f'(t) as t -> 0 (expected -1/2)."""
    vals = [(h * h * fprime_mero(h, ctx)).real for h in steps]
    return _richardson_sq(steps, vals)


def _richardson_sq(steps: Sequence[float], vals: Sequence[float]) -> float:
    # eliminate the h^2 term from the last two samples
    h1, h2 = steps[-2], steps[-1]
    v1, v2 = vals[-2], vals[-1]
    r = (h1 / h2) ** 2
    return (r * v2 - v1) / (r - 1)


def quasi_period_check(ctx: FContext, theta_grid: Sequence[float], tol: float = 1e-10) -> VerificationReport:
    """max |f(t + 2 pi tau) - f(t) + i/2| over the grid, evaluated as z -> q z."""
    t0 = time.perf_counter()
    worst = 0.0
    for th in theta_grid:
        z = cmath.exp(1j * th)
        shifted = _f_mero_z(z * ctx.q, ctx.q, 1e-16)
        worst = max(worst, abs(shifted - _f_mero_z(z, ctx.q, 1e-16) + 0.5j))
    rep = VerificationReport.numeric(
        "quasi-period", worst, tol, q=_num(ctx.q), points=len(theta_grid), period_2pi="exact"
    )
    return stamp(rep, t0)


def fprime_elliptic_check(ctx: FContext, theta_grid: Sequence[float], tol: float = 1e-10) -> VerificationReport:
    """Double periodicity of f': the 2 pi shift leaves z fixed; the 2 pi tau shift is z -> q z."""
    t0 = time.perf_counter()
    worst = 0.0
    for th in theta_grid:
        z = cmath.exp(1j * th)
        base = _fprime_z(z, ctx.q, 1e-16)
        z2pi = cmath.exp(1j * (th + 2 * math.pi))
        worst = max(
            worst,
            abs(_fprime_z(z2pi, ctx.q, 1e-16) - base),
            abs(_fprime_z(z * ctx.q, ctx.q, 1e-16) - base),
        )
    rep = VerificationReport.numeric("fprime-elliptic", worst, tol, q=_num(ctx.q), points=len(theta_grid))
    return stamp(rep, t0)


def eq1_sides(theta: complex, ctx: FContext, tol: float = 1e-16) -> tuple[complex, complex]:
    """Numeric left and right sides of the squared identity at theta in the strip."""
    theta = complex(theta)
    lhs = f_strip(theta, ctx, tol) ** 2
    cot = 0.25 * _cot_half(theta)
    rhs = cot * cot
    q = ctx.q
    if q == 0:
        return lhs, rhs
    s = abs(theta.imag)
    aq = abs(q)
    rho = aq * math.exp(s)
    # |b_n cos| <= rho^n/(1-|q|)^2, |c_n (1 - cos)| <= 2 n rho^n/(1-|q|)
    c1 = 1.0 / (1.0 - aq) ** 2
    c2 = 2.0 / (1.0 - aq)
    acc_b = 0j
    acc_c = 0j
    qn = 1.0 + 0j
    n = 0
    while True:
        n += 1
        qn *= q
        cn = cmath.cos(n * theta)
        acc_b += qn / (1 - qn) ** 2 * cn
        acc_c += n * qn / (1 - qn) * (1 - cn)
        nxt = rho ** (n + 1)
        tail = c1 * nxt / (1 - rho) + 0.5 * c2 * (n + 1) * nxt / (1 - rho) ** 2
        if tail < tol:
            break
    return lhs, rhs + acc_b + 0.5 * acc_c


def eq1_numeric_check(ctx: FContext, theta: complex, tol: float = 1e-10) -> VerificationReport:
    t0 = time.perf_counter()
    lhs, rhs = eq1_sides(theta, ctx)
    rep = VerificationReport.numeric("eq1-numeric", abs(lhs - rhs), tol, q=_num(ctx.q), theta=_num(complex(theta)))
    return stamp(rep, t0)


def overlap_check(ctx: FContext, thetas: Sequence[complex], tol: float = 1e-11) -> VerificationReport:
    """max |f_strip - f_mero| on in-strip points."""
    t0 = time.perf_counter()
    worst = max(abs(f_strip(t, ctx) - f_mero(t, ctx)) for t in thetas)
    rep = VerificationReport.numeric("continuation-overlap", worst, tol, q=_num(ctx.q), points=len(thetas))
    return stamp(rep, t0)


def random_strip_points(ctx: FContext, count: int, seed: int = 0, frac: float = 0.5) -> list[complex]:
    """Points with Re t in [0.3, 2 pi - 0.3] and |Im t| <= frac * strip."""
    import random

    rng = random.Random(seed)
    width = min(ctx.strip, 10.0) * frac
    return [complex(rng.uniform(0.3, 2 * math.pi - 0.3), rng.uniform(-width, width)) for _ in range(count)]


def off_pole_grid(points: int = 32) -> list[float]:
    """Real t at cell midpoints of [0, 2 pi), avoiding the pole at 0."""
    return [2 * math.pi * (j + 0.5) / points for j in range(points)]


def _num(v: complex):
    v = complex(v)
    return v.real if v.imag == 0 else [v.real, v.imag]
