"""Gauss 2F1(a, b; c; x) by direct summation, and its exact Taylor coefficients."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

DEFAULT_TOL = 1e-13
DEFAULT_MAX_TERMS = 200_000


class SlowConvergenceError(ArithmeticError):
    """Raised when the series has not met its tolerance within ``max_terms``."""

    def __init__(self, partial_sum: float, terms: int):
        super().__init__(f"slow convergence: {terms} terms, partial sum {partial_sum!r}")
        self.partial_sum = partial_sum
        self.terms = terms


@dataclass(frozen=True)
class HypParams:
    a: Fraction
    b: Fraction
    c: Fraction

    def __post_init__(self):
        for name in ("a", "b", "c"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.c <= 0 and self.c.denominator == 1:
            raise ValueError("c must not be a nonpositive integer")

    def swapped(self) -> "HypParams":
        return HypParams(self.b, self.a, self.c)


HALF = HypParams(Fraction(1, 2), Fraction(1, 2), Fraction(1))
THIRD = HypParams(Fraction(1, 3), Fraction(2, 3), Fraction(1))


def hyp2f1_num(p: HypParams, x: float, tol: float = DEFAULT_TOL, max_terms: int = DEFAULT_MAX_TERMS) -> float:
    """Sum the hypergeometric series at 0 <= x < 1.

    Stops once the current term and the geometric tail estimate
    ``|t| rho / (1 - rho)``, with rho the larger of the current term ratio and
    x, are both below ``tol``. For c = a + b (both parameter sets used here)
    the term ratios increase towards x, so the estimate is an upper bound.
    """
    if not (0.0 <= x < 1.0):
        raise ValueError("outside disc of convergence")
    if x == 0.0:
        return 1.0
    a, b, c = float(p.a), float(p.b), float(p.c)
    total = 1.0
    term = 1.0
    for k in range(max_terms):
        ratio = (a + k) * (b + k) / ((c + k) * (k + 1)) * x
        term *= ratio
        total += term
        rho = max(abs(ratio), x)
        if abs(term) < tol and abs(term) * rho / (1.0 - rho) < tol:
            return total
    raise SlowConvergenceError(total, max_terms)


def hyp2f1_taylor(p: HypParams, order: int) -> list[Fraction]:
    """Exact coefficients (a)_k (b)_k / ((c)_k k!) for k = 0..order."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    out = [Fraction(1)]
    for k in range(order):
        if p.c + k == 0:
            raise ZeroDivisionError("pole in parameter recurrence")
        out.append(out[-1] * (p.a + k) * (p.b + k) / ((p.c + k) * (k + 1)))
    return out
