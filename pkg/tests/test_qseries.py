import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ramanujan_elliptic.qseries import (
    QSeries,
    divisor_power_sum,
    eisenstein_series,
    lambert_series,
    ode_residuals,
    qs_arith,
    qs_compose,
    qs_qderiv,
)


def series(*coeffs):
    return QSeries(coeffs)


def small_series(min_order=0, max_order=20, unit=False):
    coeff = st.integers(-9, 9)
    first = st.integers(-9, 9).filter(bool) if unit else coeff

    @st.composite
    def build(draw):
        n = draw(st.integers(min_order, max_order))
        c = [draw(first)] + draw(st.lists(coeff, min_size=n, max_size=n))
        return QSeries(c)

    return build()


# -- examples ----------------------------------------------------------------


def test_inverse_geometric():
    assert qs_arith(series(1, 1, 0, 0), kind="inv") == series(1, -1, 1, -1)


def test_difference_of_squares():
    assert qs_arith(series(1, 1, 0, 0), series(1, -1, 0, 0), "mul") == series(1, 0, -1, 0)


def test_binomial_power():
    got = qs_arith(series(1, 1, 0), kind="pow", m=4)
    assert got == series(*[math.comb(4, k) for k in range(3)])


def test_scale_and_sub():
    a = series(1, 2, 3)
    assert qs_arith(a, Fraction(1, 2), "scale") == series(Fraction(1, 2), 1, Fraction(3, 2))
    assert qs_arith(a, a, "sub").is_zero()


def test_mismatched_orders_truncate():
    a = series(1, 1, 1, 1, 1)
    b = series(1, 1)
    assert (a + b).order == 1
    assert (a * b) == series(1, 2)


def test_inverse_of_nonunit():
    with pytest.raises(ZeroDivisionError, match="non-unit series"):
        series(0, 1, 2).inverse()


def test_inverse_with_rational_constant():
    a = series(Fraction(2, 3), 5, Fraction(-1, 7), 4)
    assert a * a.inverse() == QSeries.constant(1, 3)


@pytest.mark.parametrize(
    "coeffs, expected",
    [((1, 1, 1), (0, 1, 2)), ((5, 0, 0), (0, 0, 0)), ((0, 0, 0, 3), (0, 0, 0, 9))],
)
def test_qderiv(coeffs, expected):
    assert qs_qderiv(series(*coeffs)) == series(*expected)


def test_compose_examples():
    assert qs_compose([1] * 5, series(0, 1, 0, 0, 0)) == series(1, 1, 1, 1, 1)
    assert qs_compose([1] * 3, series(0, 2, 0)) == series(1, 2, 4)
    # (1 + x)^2 at x = q + q^2, expanded by hand: 1 + 2q + 3q^2 + ...
    assert qs_compose([1, 2, 1], series(0, 1, 1)) == series(1, 2, 3)


def test_compose_requires_positive_valuation():
    with pytest.raises(ValueError, match="composition requires positive valuation"):
        qs_compose([1, 1, 1], series(1, 1, 0))


@pytest.mark.parametrize("s, n, expected", [(1, 1, 1), (1, 6, 12), (3, 2, 9), (0, 12, 6)])
def test_divisor_power_sum(s, n, expected):
    assert divisor_power_sum(s, n) == expected


def test_divisor_power_sum_zero():
    with pytest.raises(ValueError, match="undefined"):
        divisor_power_sum(1, 0)


@pytest.mark.parametrize(
    "s, order, expected",
    [(1, 3, (0, 1, 3, 4)), (3, 2, (0, 1, 9)), (0, 2, (0, 1, 2))],
)
def test_lambert_examples(s, order, expected):
    assert lambert_series(s, order) == series(*expected)


@pytest.mark.parametrize(
    "kind, order, expected",
    [
        ("P", 3, (1, -24, -72, -96)),
        ("Q", 2, (1, 240, 2160)),
        ("R", 2, (1, -504, -16632)),
    ],
)
def test_eisenstein_examples(kind, order, expected):
    assert eisenstein_series(kind, order) == series(*expected)


@pytest.mark.parametrize("order", [0, 1, 10, 200])
def test_ode_residuals_vanish(order):
    assert all(r.is_zero() and r.order == order for r in ode_residuals(order))


def test_ode_residuals_vanish_at_500():
    assert all(r.is_zero() for r in ode_residuals(500))


def test_ode_residuals_detect_wrong_weights():
    # swap the normalization of Q: the residual must no longer vanish
    P = eisenstein_series("P", 6)
    Q_bad = 1 + 241 * lambert_series(3, 6)
    assert not (P.qderiv() - (P * P - Q_bad) * Fraction(1, 12)).is_zero()


def test_text_and_json_forms():
    a = series(1, Fraction(-3, 4), 0)
    assert a.to_text() == "0\t1/1\n1\t-3/4\n2\t0/1\n"
    assert QSeries.from_text(a.to_text()) == a
    assert a.to_json() == '["1/1", "-3/4", "0/1"]'


def test_evaluate_matches_polynomial():
    a = series(1, 2, 3)
    assert a.evaluate(0.5) == pytest.approx(1 + 1 + 0.75)


# -- properties ----------------------------------------------------------------


@settings(max_examples=50, deadline=None)
@given(small_series(), small_series(), small_series())
def test_ring_laws(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a


@settings(max_examples=100, deadline=None)
@given(small_series(unit=True))
def test_inverse_property(a):
    assert a * a.inverse() == QSeries.constant(1, a.order)


@settings(max_examples=50, deadline=None)
@given(small_series(), small_series())
def test_leibniz(a, b):
    n = min(a.order, b.order)
    a, b = a.truncate(n), b.truncate(n)
    assert (a * b).qderiv() == a.qderiv() * b + a * b.qderiv()


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 6), st.integers(1, 120))
def test_lambert_matches_divisor_oracle(s, order):
    L = lambert_series(s, order)
    assert L[0] == 0
    assert all(L[k] == divisor_power_sum(s, k) for k in range(1, order + 1))


@settings(max_examples=20, deadline=None)
@given(small_series(max_order=8), st.integers(0, 5))
def test_pow_matches_repeated_product(a, m):
    expected = QSeries.constant(1, a.order)
    for _ in range(m):
        expected = expected * a
    assert a ** m == expected


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(-5, 5), min_size=7, max_size=7), small_series(min_order=6, max_order=6))
def test_compose_matches_power_sum(outer, inner):
    inner = QSeries((0,) + inner.coeffs[1:])
    expected = QSeries.zero(inner.order)
    for k, c in enumerate(outer):
        expected = expected + (inner ** k) * c
    assert qs_compose(outer, inner) == expected
