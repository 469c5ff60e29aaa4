"""Level-4 and level-3 theta sums, the moduli x4(q) and x3(q), and their q-series.

Numeric sums are truncated with explicit tail bounds. The exact series avoid
fractional powers of q by factoring them out:

    sum_n q^((n+1/2)^2)       = 2 q^(1/4) sum_{k>=0} q^(k^2+k)
    Q(m+1/3, n+1/3)           = m^2+mn+n^2+m+n + 1/3

with Q(m, n) = m^2 + mn + n^2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .qseries import QSeries

THETA_KINDS = ("theta3", "theta2num", "cubic_a", "cubic_cnum")

# ln q * ln q~ = const^2 links the nome with its dual (see x_complement_num)
LEVEL_CONSTANT = {4: math.pi, 3: 2.0 * math.pi / math.sqrt(3.0)}


@dataclass(frozen=True)
class NomeParams:
    """Nome q with q = exp(2 pi i tau) and, for real q, q = exp(-y)."""

    q: complex

    def __post_init__(self):
        if not abs(self.q) < 1:
            raise ValueError("nome out of range")

    @classmethod
    def from_tau(cls, tau: complex) -> "NomeParams":
        if tau.imag <= 0:
            raise ValueError("tau must lie in the upper half-plane")
        import cmath

        return cls(cmath.exp(2j * math.pi * tau))

    @classmethod
    def from_y(cls, y: float) -> "NomeParams":
        if y <= 0:
            raise ValueError("y must be positive")
        return cls(math.exp(-y))

    @property
    def tau(self) -> complex:
        import cmath

        return cmath.log(self.q) / (2j * math.pi)

    @property
    def y(self) -> float:
        return -math.log(abs(self.q))


def _check(q: float, tol: float) -> None:
    if not (0.0 < q < 1.0):
        raise ValueError("nome out of range")
    if not tol > 0:
        raise ValueError("invalid tolerance")


def _theta_single(q: float, tol: float, shift: float) -> float:
    """sum over n in Z of q^((n+shift)^2) for shift in {0, 1/2}.

    Terms are paired (n, -n - 2 shift) so the sum runs over k >= 0 with
    multiplicity; the tail after index k is bounded by the next term over
    1 - q^(2(k+shift)+3), since exponent gaps only grow.
    """
    lq = math.log(q)
    if shift == 0.0:
        total, k = 1.0, 1
        mult = 2.0
    else:
        total, k = 0.0, 0
        mult = 2.0
    while True:
        e = (k + shift) ** 2
        term = mult * math.exp(e * lq)
        total += term
        nxt_e = (k + 1 + shift) ** 2
        nxt = mult * math.exp(nxt_e * lq)
        ratio = math.exp((2 * (k + 1 + shift) + 1) * lq)
        tail = nxt / (1.0 - ratio)
        if term < tol / 10 and tail < tol:
            return total
        k += 1


def _box_radius(q: float, tol: float, offset: float) -> int:
    """Radius R such that terms with max(|m|,|n|) > R sum to less than tol.

    Uses Q(m+o, n+o) >= (r - o)^2 / 2 on the ring max(|m|,|n|) = r, which holds
    since Q(u, v) >= (u^2 + v^2)/2, and the ring has 8r points.
    """
    lq = math.log(q)
    r = 1
    while True:
        first = r + 1
        t = 8 * first * math.exp(((first - offset) ** 2) / 2 * lq)
        ratio = (first + 1) / first * math.exp((first - offset + 0.5) * lq)
        if ratio < 1 and t / (1 - ratio) < tol / 10:
            return r
        r += 1


def _lattice_terms(R: int, offset: float) -> list[tuple[float, int, int]]:
    pts = []
    for m in range(-R, R + 1):
        for n in range(-R, R + 1):
            u, v = m + offset, n + offset
            pts.append((u * u + u * v + v * v, m, n))
    pts.sort()
    return pts


def _theta_double(q: float, tol: float, offset: float) -> float:
    R = _box_radius(q, tol, offset)
    lq = math.log(q)
    # fixed order: increasing exponent, ties by (m, n)
    return math.fsum(math.exp(e * lq) for e, _, _ in _lattice_terms(R, offset))


def theta_num(kind: str, q: float, tol: float = 1e-15) -> float:
    """Numeric theta-type sum for 0 < q < 1.

    ``theta3``      sum_n q^(n^2)
    ``theta2num``   sum_n q^((n+1/2)^2)
    ``cubic_a``     sum_{m,n} q^(m^2+mn+n^2)
    ``cubic_cnum``  sum_{m,n} q^Q(m+1/3, n+1/3)
    """
    _check(q, tol)
    if kind == "theta3":
        return _theta_single(q, tol, 0.0)
    if kind == "theta2num":
        return _theta_single(q, tol, 0.5)
    if kind == "cubic_a":
        return _theta_double(q, tol, 0.0)
    if kind == "cubic_cnum":
        return _theta_double(q, tol, 1.0 / 3.0)
    raise ValueError(f"unknown theta kind {kind!r}")


def x_num(level: int, q: float, tol: float = 1e-15) -> float:
    """x4 = (theta2num/theta3)^4 or x3 = (cubic_cnum/cubic_a)^3."""
    if level == 4:
        return (theta_num("theta2num", q, tol) / theta_num("theta3", q, tol)) ** 4
    if level == 3:
        return (theta_num("cubic_cnum", q, tol) / theta_num("cubic_a", q, tol)) ** 3
    raise ValueError(f"unsupported level {level!r}")


def dual_nome(level: int, q: float) -> float:
    """q~ with ln q * ln q~ = const^2 (pi^2 for level 4, 4 pi^2/3 for level 3)."""
    if not (0.0 < q < 1.0):
        raise ValueError("nome out of range")
    c = LEVEL_CONSTANT[level]
    return math.exp(c * c / math.log(q))


def x_complement_num(level: int, q: float, tol: float = 1e-15) -> float:
    """1 - x(q), computed as x(q~) at the dual nome.

    Near q = 1 the modulus rounds to 1.0 in binary64, while 1 - x(q) = x(q~)
    stays representable; this is the reflection x -> 1 - x of the inversion
    formula written in terms of q.
    """
    qd = dual_nome(level, q)
    if qd == 0.0:
        return 0.0
    return x_num(level, qd, tol)


# -- exact series ----------------------------------------------------------


def _lattice_counts(order: int, linear: bool) -> list[int]:
    """Counts of (m, n) with Q(m, n) [+ m + n if linear] = k for k <= order.

    Ranges come from completing the square: for fixed n the form is a monic
    quadratic in m, so the admissible m form an interval found exactly.
    """
    c = [0] * (order + 1)
    # Q(m,n) + m + n = (m + (n+1)/2)^2 + (3n^2 + 2n - 1)/4  >= 3(n + 1/3)^2/4 - 1/3
    # Q(m,n)         = (m + n/2)^2 + 3n^2/4
    nmax = math.isqrt(4 * (order + 1) // 3 + 1) + 2
    for n in range(-nmax, nmax + 1):
        if linear:
            # 4 * value = (2m + n + 1)^2 + 3n^2 + 2n - 1
            base = 3 * n * n + 2 * n - 1
        else:
            # 4 * value = (2m + n)^2 + 3n^2
            base = 3 * n * n
        room = 4 * order - base
        if room < 0:
            continue
        s = math.isqrt(room)
        shift = n + 1 if linear else n
        # need |2m + shift| <= s
        lo = -((s + shift) // 2)
        hi = (s - shift) // 2
        for m in range(lo, hi + 1):
            v = m * m + m * n + n * n + (m + n if linear else 0)
            if 0 <= v <= order:
                c[v] += 1
    return c


def _lattice_counts_box(order: int, linear: bool, bound: int | None = None) -> list[int]:
    """Same counts by brute force over a square box; used as an independent check."""
    if bound is None:
        bound = 2 * math.isqrt(order) + 4
    c = [0] * (order + 1)
    for m in range(-bound, bound + 1):
        for n in range(-bound, bound + 1):
            v = m * m + m * n + n * n + (m + n if linear else 0)
            if 0 <= v <= order:
                c[v] += 1
    return c


def theta_series(kind: str, order: int) -> QSeries:
    if order < 0:
        raise ValueError("order must be nonnegative")
    if kind == "theta3":
        c = [0] * (order + 1)
        c[0] = 1
        n = 1
        while n * n <= order:
            c[n * n] = 2
            n += 1
        return QSeries._from_ints(c)
    if kind == "cubic_a":
        return QSeries._from_ints(_lattice_counts(order, linear=False))
    raise ValueError(f"no exact series for {kind!r}")


def _triangular_series(order: int) -> QSeries:
    """sum_{k>=0} q^(k^2+k)."""
    c = [0] * (order + 1)
    k = 0
    while k * k + k <= order:
        c[k * k + k] = 1
        k += 1
    return QSeries._from_ints(c)


def x_series(level: int, order: int) -> QSeries:
    """Exact q-expansion of x4 or x3 through q^order."""
    if order < 1:
        raise ValueError("order too small")
    if level == 4:
        # (2 q^(1/4) T)^4 = 16 q T^4
        num = (_triangular_series(order) ** 4).shift(1) * 16
        den = theta_series("theta3", order) ** 4
    elif level == 3:
        # (q^(1/3) S)^3 = q S^3, and S starts with 3, hence 27 q
        S = QSeries._from_ints(_lattice_counts(order, linear=True))
        num = (S ** 3).shift(1)
        den = theta_series("cubic_a", order) ** 3
    else:
        raise ValueError(f"unsupported level {level!r}")
    return num / den
