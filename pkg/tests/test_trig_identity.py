import math
import random
from fractions import Fraction

import pytest

from ramanujan_elliptic.qseries import QSeries
from ramanujan_elliptic.trig_identity import cot_sin_expand, eq1_residual, expand_eq1_side


def cosine_poly(coeffs, t):
    return sum(c * math.cos(k * t) for k, c in enumerate(coeffs))


def direct_sides(q, t, terms=200):
    f = 0.25 / math.tan(t / 2) + sum(q**n / (1 - q**n) * math.sin(n * t) for n in range(1, terms))
    rhs = (0.25 / math.tan(t / 2)) ** 2
    rhs += sum(q**n / (1 - q**n) ** 2 * math.cos(n * t) for n in range(1, terms))
    rhs += 0.5 * sum(n * q**n / (1 - q**n) * (1 - math.cos(n * t)) for n in range(1, terms))
    return f * f, rhs


@pytest.mark.parametrize(
    "n, expected", [(1, [1, 1]), (2, [1, 2, 1]), (3, [1, 2, 2, 1])]
)
def test_cot_sin_examples(n, expected):
    assert cot_sin_expand(n) == expected


def test_cot_sin_zero_harmonic():
    with pytest.raises(ValueError, match="undefined harmonic"):
        cot_sin_expand(0)


@pytest.mark.parametrize("n", range(1, 21))
def test_cot_sin_numeric_sampling(n):
    rng = random.Random(n)
    coeffs = cot_sin_expand(n)
    for _ in range(10):
        t = rng.uniform(0.1, 3.0)
        assert cosine_poly(coeffs, t) == pytest.approx(math.sin(n * t) / math.tan(t / 2), abs=1e-12)


def test_rhs_order_one():
    r = expand_eq1_side("RHS", 1)
    half_q = QSeries([0, Fraction(1, 2)])
    assert r.cot2 == QSeries.constant(Fraction(1, 16), 1)
    assert r.cos_coeffs[0] == half_q
    assert r.cos_coeffs[1] == half_q
    assert r.cos_coeffs[2].is_zero()
    assert r.harmonic_bound == 2


def test_lhs_order_one():
    lhs = expand_eq1_side("LHS", 1)
    half_q = QSeries([0, Fraction(1, 2)])
    assert lhs.cos_coeffs[0] == half_q
    assert lhs.cos_coeffs[1] == half_q
    # numeric oracle: (f^2 - cot^2/16) / q -> cot(t/2) sin t / 2 = (1 + cos t)/2 as q -> 0
    q, t = 1e-7, 1.1
    f2, _ = direct_sides(q, t)
    approx = (f2 - (0.25 / math.tan(t / 2)) ** 2) / q
    assert approx == pytest.approx((1 + math.cos(t)) / 2, rel=1e-5)


@pytest.mark.parametrize("side", ["LHS", "RHS"])
@pytest.mark.parametrize("order", [1, 5, 12])
def test_cot2_is_one_sixteenth(side, order):
    assert expand_eq1_side(side, order).cot2 == QSeries.constant(Fraction(1, 16), order)


@pytest.mark.parametrize("order", range(1, 31))
def test_residual_vanishes(order):
    res = eq1_residual(order)
    assert res.is_zero()
    assert res.harmonic_bound == 2 * order


def test_unknown_side():
    with pytest.raises(ValueError):
        expand_eq1_side("MIDDLE", 3)


@pytest.mark.parametrize("q", [0.05, 0.1])
@pytest.mark.parametrize("t", [0.7, 1.3, 2.9])
def test_expansion_matches_numeric_sides(q, t):
    N = 20
    lhs_num, rhs_num = direct_sides(q, t)
    assert expand_eq1_side("LHS", N).evaluate(q, t) == pytest.approx(lhs_num, abs=1e-9)
    assert expand_eq1_side("RHS", N).evaluate(q, t) == pytest.approx(rhs_num, abs=1e-9)
