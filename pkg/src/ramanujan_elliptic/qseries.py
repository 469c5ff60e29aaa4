"""Truncated power series in q with exact rational coefficients.

A :class:`QSeries` of order ``N`` stands for ``sum(c[k] q^k, k=0..N) + O(q^(N+1))``.
Binary operations truncate to the shorter operand, so no coefficient is ever
reported beyond the precision actually known.

Products and inverses are computed on integer numerators over a common
denominator, which keeps the Eisenstein and hypergeometric checks fast at
orders in the hundreds.
"""

from __future__ import annotations

import json
import math
from fractions import Fraction
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction]


def _to_scaled_ints(coeffs: Sequence[Fraction]) -> tuple[list[int], int]:
    """Return integers ``A`` and ``d > 0`` with ``coeffs[k] == A[k] / d``."""
    den = 1
    for c in coeffs:
        if c.denominator != 1:
            den = math.lcm(den, c.denominator)
    if den == 1:
        return [c.numerator for c in coeffs], 1
    return [c.numerator * (den // c.denominator) for c in coeffs], den


def _convolve(a: Sequence[int], b: Sequence[int], n: int) -> list[int]:
    out = [0] * (n + 1)
    # skip zero rows: theta-type series are mostly zeros
    for i in range(n + 1):
        ai = a[i]
        if ai == 0:
            continue
        for j in range(n + 1 - i):
            bj = b[j]
            if bj:
                out[i + j] += ai * bj
    return out


class QSeries:
    """Immutable truncated q-series over the rationals."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[Scalar]):
        c = tuple(Fraction(x) for x in coeffs)
        if not c:
            raise ValueError("a series needs at least a constant term")
        self._c = c

    # -- constructors ------------------------------------------------------

    @classmethod
    def constant(cls, value: Scalar, order: int) -> "QSeries":
        return cls([value] + [0] * order)

    @classmethod
    def monomial(cls, power: int, order: int, coeff: Scalar = 1) -> "QSeries":
        c = [0] * (order + 1)
        if power <= order:
            c[power] = coeff
        return cls(c)

    @classmethod
    def zero(cls, order: int) -> "QSeries":
        return cls([0] * (order + 1))

    @classmethod
    def _from_ints(cls, nums: Sequence[int], den: int = 1) -> "QSeries":
        obj = cls.__new__(cls)
        if den == 1:
            obj._c = tuple(Fraction(x) for x in nums)
        else:
            obj._c = tuple(Fraction(x, den) for x in nums)
        return obj

    # -- basic accessors ---------------------------------------------------

    @property
    def order(self) -> int:
        return len(self._c) - 1

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._c

    def __getitem__(self, k: int) -> Fraction:
        return self._c[k]

    def __len__(self) -> int:
        return len(self._c)

    def __iter__(self):
        return iter(self._c)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, QSeries):
            return self._c == other._c
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._c)

    def __repr__(self) -> str:
        terms = []
        for k, c in enumerate(self._c):
            if c:
                terms.append(f"{c}*q^{k}" if k else str(c))
        body = " + ".join(terms) if terms else "0"
        return f"QSeries({body} + O(q^{self.order + 1}))"

    def truncate(self, order: int) -> "QSeries":
        if order > self.order:
            raise ValueError(f"cannot extend a series of order {self.order} to {order}")
        if order == self.order:
            return self
        obj = QSeries.__new__(QSeries)
        obj._c = self._c[: order + 1]
        return obj

    def is_zero(self) -> bool:
        return not any(self._c)

    def valuation(self) -> int | None:
        """Index of the first nonzero coefficient, or None for the zero series."""
        for k, c in enumerate(self._c):
            if c:
                return k
        return None

    def max_abs_coeff(self) -> Fraction:
        return max((abs(c) for c in self._c), default=Fraction(0))

    # -- arithmetic --------------------------------------------------------

    @staticmethod
    def _common(a: "QSeries", b: "QSeries") -> tuple[tuple, tuple, int]:
        n = min(a.order, b.order)
        return a._c[: n + 1], b._c[: n + 1], n

    def __add__(self, other):
        if isinstance(other, QSeries):
            x, y, _ = self._common(self, other)
            return QSeries._wrap(tuple(p + r for p, r in zip(x, y)))
        if isinstance(other, (int, Fraction)):
            return QSeries._wrap((self._c[0] + other,) + self._c[1:])
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return QSeries._wrap(tuple(-c for c in self._c))

    def __sub__(self, other):
        if isinstance(other, QSeries):
            x, y, _ = self._common(self, other)
            return QSeries._wrap(tuple(p - r for p, r in zip(x, y)))
        if isinstance(other, (int, Fraction)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, QSeries):
            x, y, n = self._common(self, other)
            xa, dx = _to_scaled_ints(x)
            ya, dy = _to_scaled_ints(y)
            return QSeries._from_ints(_convolve(xa, ya, n), dx * dy)
        if isinstance(other, (int, Fraction)):
            return QSeries._wrap(tuple(c * other for c in self._c))
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, m: int) -> "QSeries":
        if not isinstance(m, int) or m < 0:
            raise ValueError("power must be a nonnegative integer")
        result = QSeries.constant(1, self.order)
        base = self
        while m:
            if m & 1:
                result = result * base
            m >>= 1
            if m:
                base = base * base
        return result

    def inverse(self) -> "QSeries":
        """Multiplicative inverse; requires a nonzero constant term."""
        if self._c[0] == 0:
            raise ZeroDivisionError("non-unit series")
        nums, den = _to_scaled_ints(self._c)
        n = self.order
        a0 = nums[0]
        # beta[k] = b[k] * a0^(k+1) is an integer when b = 1/A
        beta = [1] + [0] * n
        a0_pows = [1] * (n + 1)
        for j in range(1, n + 1):
            a0_pows[j] = a0_pows[j - 1] * a0
        for k in range(1, n + 1):
            s = 0
            for j in range(1, k + 1):
                aj = nums[j]
                if aj:
                    s += aj * beta[k - j] * a0_pows[j - 1]
            beta[k] = -s
        coeffs = tuple(Fraction(beta[k] * den, a0_pows[k] * a0) for k in range(n + 1))
        return QSeries._wrap(coeffs)

    def __truediv__(self, other):
        if isinstance(other, QSeries):
            return self * other.inverse()
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        return NotImplemented

    def qderiv(self) -> "QSeries":
        """Apply q d/dq; the order is unchanged since the operator preserves degree."""
        return QSeries._wrap(tuple(k * c for k, c in enumerate(self._c)))

    def shift(self, power: int) -> "QSeries":
        """Multiply by q^power, keeping the order."""
        n = self.order
        c = (Fraction(0),) * min(power, n + 1) + self._c[: max(n + 1 - power, 0)]
        return QSeries._wrap(c)

    def compose(self, outer: Sequence[Scalar]) -> "QSeries":
        return qs_compose(outer, self)

    # -- numerics and I/O --------------------------------------------------

    def evaluate(self, x: complex | float) -> complex | float:
        """Horner evaluation of the truncated polynomial at a float or complex point."""
        acc = 0.0
        for c in reversed(self._c):
            acc = acc * x + float(c)
        return acc

    def to_text(self) -> str:
        return "".join(f"{k}\t{c.numerator}/{c.denominator}\n" for k, c in enumerate(self._c))

    def to_json(self) -> str:
        return json.dumps([f"{c.numerator}/{c.denominator}" for c in self._c])

    @classmethod
    def from_text(cls, text: str) -> "QSeries":
        coeffs = []
        for line in text.splitlines():
            if not line.strip():
                continue
            k, val = line.split("\t")
            if int(k) != len(coeffs):
                raise ValueError(f"expected power {len(coeffs)}, got {k}")
            coeffs.append(Fraction(val))
        return cls(coeffs)

    @classmethod
    def _wrap(cls, coeffs: tuple[Fraction, ...]) -> "QSeries":
        obj = cls.__new__(cls)
        obj._c = coeffs
        return obj


def qs_arith(a: QSeries, b: QSeries | Scalar | None = None, kind: str = "add", m: int | None = None) -> QSeries:
    """Functional front end to the series arithmetic.

    ``kind`` is one of ``add``, ``sub``, ``mul``, ``scale``, ``pow`` (with
    exponent ``m``) or ``inv``.
    """
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    if kind == "scale":
        if isinstance(b, QSeries):
            raise TypeError("scale takes a rational scalar")
        return a * Fraction(b)
    if kind == "pow":
        if m is None:
            raise ValueError("pow requires an exponent")
        return a ** m
    if kind == "inv":
        return a.inverse()
    raise ValueError(f"unknown operation {kind!r}")


def qs_qderiv(a: QSeries) -> QSeries:
    return a.qderiv()


def qs_compose(outer: Sequence[Scalar], inner: QSeries) -> QSeries:
    """Exact ``sum(outer[k] * inner^k)`` truncated to the order of ``inner``.

    ``inner`` must vanish at q = 0, so only ``outer[0..order]`` contribute.
    """
    if inner[0] != 0:
        raise ValueError("composition requires positive valuation")
    n = inner.order
    if len(outer) < n + 1:
        raise ValueError(f"need at least {n + 1} outer coefficients, got {len(outer)}")
    outer = [Fraction(c) for c in outer[: n + 1]]
    # Horner in inner: every multiplication by inner raises valuation by one,
    # so the partial results never need more than n+1 coefficients.
    acc = QSeries.constant(outer[n], n)
    for k in range(n - 1, -1, -1):
        acc = acc * inner + outer[k]
    return acc


def divisor_power_sum(s: int, n: int) -> int:
    """sigma_s(n) by direct enumeration of divisor pairs up to sqrt(n)."""
    if n <= 0:
        raise ValueError("undefined")
    total = 0
    d = 1
    while d * d <= n:
        if n % d == 0:
            e = n // d
            total += d ** s
            if e != d:
                total += e ** s
        d += 1
    return total


def lambert_series(s: int, order: int) -> QSeries:
    """Expand sum_{n>=1} n^s q^n / (1 - q^n); coefficient k is sigma_s(k)."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    c = [0] * (order + 1)
    for n in range(1, order + 1):
        w = n ** s
        for k in range(n, order + 1, n):
            c[k] += w
    return QSeries._from_ints(c)


_EISENSTEIN = {"P": (1, -24), "Q": (3, 240), "R": (5, -504)}


def eisenstein_series(kind: str, order: int) -> QSeries:
    """Ramanujan's P, Q, R: 1 - 24 L_1, 1 + 240 L_3, 1 - 504 L_5."""
    try:
        s, w = _EISENSTEIN[kind]
    except KeyError:
        raise ValueError(f"unknown Eisenstein series {kind!r}") from None
    return 1 + w * lambert_series(s, order)


def ode_residuals(order: int) -> tuple[QSeries, QSeries, QSeries]:
    """Residuals of qP' = (P^2-Q)/12, qQ' = (PQ-R)/3, qR' = (PR-Q^2)/2."""
    P = eisenstein_series("P", order)
    Q = eisenstein_series("Q", order)
    R = eisenstein_series("R", order)
    r1 = P.qderiv() - (P * P - Q) * Fraction(1, 12)
    r2 = Q.qderiv() - (P * Q - R) * Fraction(1, 3)
    r3 = R.qderiv() - (P * R - Q * Q) * Fraction(1, 2)
    return r1, r2, r3
