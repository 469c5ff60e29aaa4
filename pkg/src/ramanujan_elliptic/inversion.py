"""Inverting the level-4 and level-3 moduli with hypergeometric quotients.

For level 4, x4(q) = (theta2num/theta3)^4 has inverse
q = exp(-pi F(1-x)/F(x)) with F = 2F1(1/2, 1/2; 1; .), and F(x4(q)) = theta3(q)^2.
Level 3 is the cubic analogue with constant 2 pi/sqrt(3), F = 2F1(1/3, 2/3; 1; .)
and F(x3(q)) = cubic_a(q).

Check functions return :class:`VerificationReport` objects and never raise on a
failed identity; domain errors in the inputs still raise.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from typing import Sequence

from . import theta
from .hyper2f1 import DEFAULT_TOL, HALF, THIRD, HypParams, hyp2f1_num, hyp2f1_taylor
from .qseries import qs_compose
from .report import VerificationReport, stamp


@dataclass(frozen=True)
class InversionLevel:
    level: int
    constant: float
    hyp_params: HypParams

    @classmethod
    def of(cls, level: "int | InversionLevel") -> "InversionLevel":
        if isinstance(level, InversionLevel):
            return level
        try:
            return LEVELS[level]
        except KeyError:
            raise ValueError(f"unsupported level {level!r}") from None


LEVELS = {
    4: InversionLevel(4, math.pi, HALF),
    3: InversionLevel(3, 2.0 * math.pi / math.sqrt(3.0), THIRD),
}

# numeric roundtrips are validated on these q-ranges only; beyond them x is so
# close to 1 that 2F1 summation near its log singularity loses accuracy
VALIDATED_Q = {4: (0.001, 0.25), 3: (0.001, 0.20)}


def q_of_x(level: "int | InversionLevel", x: float, tol: float = DEFAULT_TOL) -> float:
    lv = InversionLevel.of(level)
    if not (0.0 < x < 1.0):
        raise ValueError("modulus out of range")
    f_x = hyp2f1_num(lv.hyp_params, x, tol)
    f_1mx = hyp2f1_num(lv.hyp_params, 1.0 - x, tol)
    return math.exp(-lv.constant * f_1mx / f_x)


def roundtrip_check(level, q_grid: Sequence[float], tol: float = 1e-8) -> VerificationReport:
    """max |q_of_x(x(q)) - q| over the grid."""
    t0 = time.perf_counter()
    lv = InversionLevel.of(level)
    worst = 0.0
    for q in q_grid:
        x = theta.x_num(lv.level, q)
        worst = max(worst, abs(q_of_x(lv, x) - q))
    rep = VerificationReport.numeric(
        f"inversion-roundtrip-level{lv.level}", worst, tol,
        level=lv.level, q_min=min(q_grid), q_max=max(q_grid), points=len(q_grid),
    )
    return stamp(rep, t0)


def symmetry_point_check(level, tol: float = 1e-9) -> VerificationReport:
    """q_of_x at x = 1/2 against the closed form exp(-constant)."""
    t0 = time.perf_counter()
    lv = InversionLevel.of(level)
    err = abs(q_of_x(lv, 0.5) - math.exp(-lv.constant))
    rep = VerificationReport.numeric(f"symmetry-point-level{lv.level}", err, tol, level=lv.level, x=0.5)
    return stamp(rep, t0)


def moreover_residual_num(level, q: float) -> float:
    lv = InversionLevel.of(level)
    x = theta.x_num(lv.level, q)
    lhs = hyp2f1_num(lv.hyp_params, x)
    if lv.level == 4:
        rhs = theta.theta_num("theta3", q) ** 2
    else:
        rhs = theta.theta_num("cubic_a", q)
    return abs(lhs - rhs)


def moreover_check_num(level, q: float, tol: float = 1e-9) -> VerificationReport:
    """|2F1(x(q)) - theta3(q)^2| (level 4) or |2F1(x(q)) - cubic_a(q)| (level 3)."""
    t0 = time.perf_counter()
    lv = InversionLevel.of(level)
    lo, hi = VALIDATED_Q[lv.level]
    if not (0.0 < q <= hi):
        raise ValueError(f"q={q} outside the validated range (0, {hi}]")
    rep = VerificationReport.numeric(
        f"moreover-num-level{lv.level}", moreover_residual_num(lv, q), tol, level=lv.level, q=q
    )
    return stamp(rep, t0)


def moreover_series_residual(level, order: int):
    """Exact q-series of 2F1(x(q)) minus the theta side, through q^order."""
    lv = InversionLevel.of(level)
    if order < 1:
        raise ValueError("order must be at least 1")
    lhs = qs_compose(hyp2f1_taylor(lv.hyp_params, order), theta.x_series(lv.level, order))
    if lv.level == 4:
        rhs = theta.theta_series("theta3", order) ** 2
    else:
        rhs = theta.theta_series("cubic_a", order)
    return lhs - rhs


def moreover_check_exact(level, order: int) -> VerificationReport:
    t0 = time.perf_counter()
    lv = InversionLevel.of(level)
    res = moreover_series_residual(lv, order)
    rep = VerificationReport.exact(f"moreover-exact-level{lv.level}", res.max_abs_coeff(), level=lv.level, order=order)
    return stamp(rep, t0)


def _complement_pair(level: int, q: float) -> tuple[float, float]:
    """(x, 1 - x) with whichever of the two is below 1/2 computed directly."""
    x = theta.x_num(level, q)
    if x <= 0.5:
        return x, 1.0 - x
    comp = theta.x_complement_num(level, q)
    return 1.0 - comp, comp


def _strictly_before(a: tuple[float, float], b: tuple[float, float]) -> bool:
    xa, ca = a
    xb, cb = b
    if xa <= 0.5 and xb <= 0.5:
        return xa < xb
    if xa > 0.5 and xb > 0.5:
        return ca > cb
    return xa <= 0.5 < xb


def monotonicity_scan(level, grid: Sequence[float], tol: float = 0.0) -> VerificationReport:
    """Pass iff x(q) strictly increases along the grid.

    Where x > 1/2 the comparison is made on 1 - x, which does not round to 0
    as q approaches 1. ``tol`` is the minimum required step (0 means any
    positive step).
    """
    t0 = time.perf_counter()
    lv = InversionLevel.of(level)
    pairs = [_complement_pair(lv.level, q) for q in grid]
    violations = 0 if len(pairs) >= 2 else 1
    min_step = math.inf
    for a, b in zip(pairs, pairs[1:]):
        both_high = a[0] > 0.5 and b[0] > 0.5
        step = (a[1] - b[1]) if both_high else (b[0] - a[0])
        min_step = min(min_step, step)
        if not _strictly_before(a, b) or step <= tol:
            violations += 1
    # residual is the count of non-increasing steps, tolerated count 0
    rep = VerificationReport.numeric(
        f"monotonic-level{lv.level}", float(violations), 0.0,
        level=lv.level, q_min=min(grid), q_max=max(grid), points=len(grid),
        min_step_required=tol, min_step=min_step if pairs[1:] else None,
    )
    return stamp(rep, t0)


def reflection_product(level, x: float) -> float:
    """ln q(x) * ln q(1 - x); equals constant^2 for every x in (0, 1)."""
    return math.log(q_of_x(level, x)) * math.log(q_of_x(level, 1.0 - x))
