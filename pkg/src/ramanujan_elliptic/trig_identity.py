"""Exact coefficientwise check of the squared cot/Lambert identity.

Both sides of

    (cot(t/2)/4 + sum a_n sin(n t))^2
        = cot(t/2)^2/16 + sum b_n cos(n t) + 1/2 sum c_n (1 - cos(n t))

with a_n = q^n/(1-q^n), b_n = q^n/(1-q^n)^2, c_n = n q^n/(1-q^n) are written
in the basis {cot^2(t/2)} + {cos(k t) : 0 <= k <= 2N} with q-series
coefficients, and the difference is checked to vanish exactly.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

from .qseries import QSeries


@dataclass(frozen=True)
class TrigQSeries:
    """``cot2 * cot^2(t/2) + sum_k cos_coeffs[k] * cos(k t)``."""

    cot2: QSeries
    cos_coeffs: tuple[QSeries, ...]

    def __post_init__(self):
        n = self.cot2.order
        if any(c.order != n for c in self.cos_coeffs):
            raise ValueError("all components must share one truncation order")

    @property
    def order(self) -> int:
        return self.cot2.order

    @property
    def harmonic_bound(self) -> int:
        return len(self.cos_coeffs) - 1

    def components(self):
        yield "cot2", self.cot2
        for k, c in enumerate(self.cos_coeffs):
            yield f"cos{k}", c

    def __sub__(self, other: "TrigQSeries") -> "TrigQSeries":
        if self.harmonic_bound != other.harmonic_bound:
            raise ValueError("harmonic bounds differ")
        return TrigQSeries(
            self.cot2 - other.cot2,
            tuple(a - b for a, b in zip(self.cos_coeffs, other.cos_coeffs)),
        )

    def is_zero(self) -> bool:
        return all(c.is_zero() for _, c in self.components())

    def max_abs_coeff(self) -> Fraction:
        return max(c.max_abs_coeff() for _, c in self.components())

    def evaluate(self, q: float, theta: complex) -> complex:
        """Substitute numeric q and theta into the truncated expansion."""
        trig = cmath if isinstance(theta, complex) else math
        cot = trig.cos(theta / 2) / trig.sin(theta / 2)
        cosk = [trig.cos(k * theta) for k in range(len(self.cos_coeffs))]
        total = self.cot2.evaluate(q) * cot * cot
        for ck, c in zip(cosk, self.cos_coeffs):
            total += c.evaluate(q) * ck
        return total


def cot_sin_expand(n: int) -> list[int]:
    """Cosine coefficients of cot(t/2) sin(n t): 1 + 2 cos t + ... + 2 cos((n-1)t) + cos(n t)."""
    if n < 1:
        raise ValueError("undefined harmonic")
    return [1] + [2] * (n - 1) + [1]


def _geometric(n: int, order: int, weight=lambda m: 1) -> list[int]:
    """Integer coefficients of sum_{m>=1} weight(m) q^(n m) up to ``order``."""
    c = [0] * (order + 1)
    m = 1
    while n * m <= order:
        c[n * m] = weight(m)
        m += 1
    return c


def _a(n: int, order: int) -> QSeries:
    return QSeries._from_ints(_geometric(n, order))


def _b(n: int, order: int) -> QSeries:
    return QSeries._from_ints(_geometric(n, order, weight=lambda m: m))


def _c(n: int, order: int) -> QSeries:
    return QSeries._from_ints([n * x for x in _geometric(n, order)])


def expand_eq1_side(side: str, order: int) -> TrigQSeries:
    """Expand the left (``"LHS"``) or right (``"RHS"``) side to q-order ``order``."""
    if order < 1:
        raise ValueError("order must be at least 1")
    N = order
    K = 2 * N
    cos = [[Fraction(0)] * (N + 1) for _ in range(K + 1)]

    def add(k: int, s: QSeries, w: Fraction) -> None:
        row = cos[k]
        for i, x in enumerate(s):
            if x:
                row[i] += w * x

    if side == "LHS":
        a = [None] + [_a(n, N) for n in range(1, N + 1)]
        # cross term 2 * (1/4) cot(t/2) * a_n sin(n t)
        half = Fraction(1, 2)
        for n in range(1, N + 1):
            for k, w in enumerate(cot_sin_expand(n)):
                add(k, a[n], half * w)
        # a_m a_n sin(m t) sin(n t) = a_m a_n (cos((m-n)t) - cos((m+n)t)) / 2
        for m in range(1, N + 1):
            for n in range(1, N + 1 - m):
                p = a[m] * a[n]
                add(abs(m - n), p, half)
                add(m + n, p, -half)
    elif side == "RHS":
        half = Fraction(1, 2)
        for n in range(1, N + 1):
            b = _b(n, N)
            c = _c(n, N)
            add(n, b, Fraction(1))
            add(0, c, half)
            add(n, c, -half)
    else:
        raise ValueError(f"side must be 'LHS' or 'RHS', got {side!r}")

    return TrigQSeries(
        QSeries.constant(Fraction(1, 16), N),
        tuple(QSeries(row) for row in cos),
    )


def eq1_residual(order: int) -> TrigQSeries:
    return expand_eq1_side("LHS", order) - expand_eq1_side("RHS", order)
