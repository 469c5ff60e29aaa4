"""Fourier-series elliptic functions S, C, C1 with decay parameter y (q = e^-y).

    S(t)  = sum_{n>=0} sin((n+1/2) t) / sinh((n+1/2) y)
    C(t)  = sum_{n>=0} cos((n+1/2) t) / cosh((n+1/2) y)
    C1(t) = 1/2 + sum_{n>=1} cos(n t) / cosh(n y)

They satisfy S' = C C1, C' = -S C1, C1' = -S C, and the squares obey two
linear relations of Pythagorean type whose constants depend on y only.
"""

from __future__ import annotations

import cmath
import math
import time
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .report import VerificationReport, stamp

FUNCTIONS = ("S", "C", "C1", "dS", "dC", "dC1")


@dataclass(frozen=True)
class JacobiContext:
    y: float

    def __post_init__(self):
        if not self.y > 0:
            raise ValueError("y must be positive")

    @property
    def q(self) -> float:
        return math.exp(-self.y)

    def in_strip(self, theta: complex) -> bool:
        return abs(complex(theta).imag) < self.y


def _terms(fn: str, theta: complex, y: float):
    """Yield (frequency, term) pairs for the series of ``fn``."""
    half = fn in ("S", "C", "dS", "dC")
    n = 0 if half else 1
    while True:
        w = n + 0.5 if half else float(n)
        wt = w * theta
        if fn == "S":
            t = cmath.sin(wt) / math.sinh(w * y)
        elif fn == "dS":
            t = w * cmath.cos(wt) / math.sinh(w * y)
        elif fn in ("C", "C1"):
            t = cmath.cos(wt) / math.cosh(w * y)
        else:  # dC, dC1
            t = -w * cmath.sin(wt) / math.cosh(w * y)
        yield w, t
        n += 1


def jacobi_eval(fn: str, theta: complex, ctx: JacobiContext, tol: float = 1e-16) -> complex:
    """Evaluate S, C, C1 or a termwise derivative at complex theta with |Im theta| < y.

    Each term is bounded by ``w^p * 2 e^{-w(y - s)} / (1 - e^{-2y})`` with
    s = |Im theta| and p = 1 for derivatives; since consecutive frequencies
    differ by 1, the tail after frequency w is at most the next bound over
    ``1 - r`` with r the ratio of successive bounds.
    """
    if fn not in FUNCTIONS:
        raise ValueError(f"unknown function {fn!r}")
    theta = complex(theta)
    s = abs(theta.imag)
    y = ctx.y
    if s >= y:
        raise ValueError("outside convergence strip")
    if not tol > 0:
        raise ValueError("invalid tolerance")
    gap = y - s
    p = 1 if fn.startswith("d") else 0
    # 1/sinh(wy) <= 2 e^{-wy} / (1 - e^{-2 y w}) <= 2 e^{-wy} / (1 - e^{-y}) for w >= 1/2
    k = 2.0 / (1.0 - math.exp(-y))
    total = 0.5 + 0j if fn == "C1" else 0j
    for w, t in _terms(fn, theta, y):
        total += t
        w1 = w + 1.0
        nxt = k * w1 ** p * math.exp(-w1 * gap)
        r = ((w1 + 1.0) / w1) ** p * math.exp(-gap)
        if r < 1.0 and nxt / (1.0 - r) < tol:
            return total


def derivative_identity_check(ctx: JacobiContext, theta_grid: Sequence[complex], tol: float = 1e-10) -> VerificationReport:
    """Max over the grid of |S' - C C1|, |C' + S C1|, |C1' + S C|."""
    t0 = time.perf_counter()
    worst = 0.0
    for th in theta_grid:
        S, C, C1 = (jacobi_eval(f, th, ctx) for f in ("S", "C", "C1"))
        dS, dC, dC1 = (jacobi_eval(f, th, ctx) for f in ("dS", "dC", "dC1"))
        worst = max(worst, abs(dS - C * C1), abs(dC + S * C1), abs(dC1 + S * C))
    rep = VerificationReport.numeric("jacobian-deriv", worst, tol, y=ctx.y, points=len(theta_grid))
    return stamp(rep, t0)


@dataclass(frozen=True)
class PythagoreanFit:
    """C^2 + alpha S^2 = beta and C1^2 + gamma S^2 = delta."""

    alpha: float
    beta: float
    gamma: float
    delta: float

    def as_dict(self) -> dict[str, float]:
        return {"alpha": self.alpha, "beta": self.beta, "gamma": self.gamma, "delta": self.delta}


def fit_pythagorean(ctx: JacobiContext, fit_thetas: Sequence[float]) -> PythagoreanFit:
    """Solve for the constants from two fit points."""
    t1, t2 = fit_thetas
    rows = []
    for th in (t1, t2):
        S = jacobi_eval("S", th, ctx).real
        C = jacobi_eval("C", th, ctx).real
        C1 = jacobi_eval("C1", th, ctx).real
        rows.append((S * S, C * C, C1 * C1))
    (s1, c1, d1), (s2, c2, d2) = rows
    # unknowns (alpha, beta): s * alpha - beta = -c
    A = np.array([[s1, -1.0], [s2, -1.0]])
    det = s1 - s2
    if s1 == 0.0 or s2 == 0.0 or abs(det) <= 1e-12 * max(s1, s2):
        raise ValueError("degenerate fit")
    alpha, beta = np.linalg.solve(A, [-c1, -c2])
    gamma, delta = np.linalg.solve(A, [-d1, -d2])
    return PythagoreanFit(float(alpha), float(beta), float(gamma), float(delta))


def pythagorean_residual(ctx: JacobiContext, fit: PythagoreanFit, grid: Sequence[float]) -> float:
    worst = 0.0
    for th in grid:
        S = jacobi_eval("S", th, ctx)
        C = jacobi_eval("C", th, ctx)
        C1 = jacobi_eval("C1", th, ctx)
        worst = max(
            worst,
            abs(C * C + fit.alpha * S * S - fit.beta),
            abs(C1 * C1 + fit.gamma * S * S - fit.delta),
        )
    return worst


def pythagorean_probe(
    ctx: JacobiContext,
    fit_thetas: Sequence[float],
    check_grid: Sequence[complex],
    tol: float = 1e-9,
) -> VerificationReport:
    """Fit the two relations at two points and check them across the grid."""
    t0 = time.perf_counter()
    fit = fit_pythagorean(ctx, fit_thetas)
    worst = pythagorean_residual(ctx, fit, check_grid)
    rep = VerificationReport.numeric(
        "pythagorean", worst, tol, y=ctx.y, fit_thetas=list(fit_thetas), points=len(check_grid), **fit.as_dict()
    )
    return stamp(rep, t0)


def refit_stability(ctx: JacobiContext, first: Sequence[float], second: Sequence[float], tol: float = 1e-8) -> VerificationReport:
    """Largest change in the fitted constants when refitting at a second pair."""
    t0 = time.perf_counter()
    a = fit_pythagorean(ctx, first).as_dict()
    b = fit_pythagorean(ctx, second).as_dict()
    diff = max(abs(a[k] - b[k]) for k in a)
    rep = VerificationReport.numeric(
        "pythagorean-refit", diff, tol, y=ctx.y, first=list(first), second=list(second)
    )
    return stamp(rep, t0)


def real_grid(points: int = 64, period: float = 4 * math.pi) -> list[float]:
    return [period * j / points for j in range(points)]
