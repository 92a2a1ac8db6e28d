from fractions import Fraction
from math import comb

import numpy as np
import pytest

from app.core.exceptions import PreconditionViolation, TruncationError
from app.series import (
    BivariateSeries,
    GradedExpansion,
    LogExtendedFunction,
    MonomialSeries,
    RationalFunction,
    Series,
    graded_exp,
    graded_log,
    w_derivative_at_one,
)
from app.series.rational_function import nu_factor


def test_log_of_one_plus_s():
    s = Series([1, 1], 3)
    assert list(s.log().coefficients) == [0, 1, Fraction(-1, 2), Fraction(1, 3)]


def test_exp_inverts_log():
    a = Series([0, 2, Fraction(1, 3), -5, 7], 4)
    assert a.exp().log() == a


def test_square_root():
    s = Series([1, 1], 3)
    root = s.power(Fraction(1, 2))
    assert list(root.coefficients) == [1, Fraction(1, 2), Fraction(-1, 8), Fraction(1, 16)]
    assert root * root == s


def test_inverse_of_geometric_series():
    geometric = Series([1] * 6, 5)
    assert geometric.inverse() == Series([1, -1], 5)


def test_negative_power_matches_inverse():
    a = Series([2, 3, 1], 5)
    assert a.power(-2) == (a * a).inverse()


def test_compose_with_variable_is_identity():
    a = Series([3, 1, 4, 1, 5], 4)
    assert a.compose(Series.variable(4)) == a


def test_mixed_orders_truncate_to_the_smaller():
    assert (Series([1, 1, 1], 2) * Series([1, 1], 5)).order == 2


def test_preconditions():
    with pytest.raises(PreconditionViolation):
        Series([2, 1], 3).log()
    with pytest.raises(PreconditionViolation):
        Series([1, 1], 3).exp()
    with pytest.raises(PreconditionViolation):
        Series([0, 1], 3).inverse()
    with pytest.raises(PreconditionViolation):
        Series([1, 1], 3).compose(Series([1, 1], 3))
    with pytest.raises(PreconditionViolation):
        Series([1], -1)


def test_truncation_errors():
    a = Series([1, 2, 3], 2)
    with pytest.raises(TruncationError):
        a[3]
    with pytest.raises(TruncationError):
        a.truncate(4)


def test_first_difference():
    a = Series([1, 2, 3], 2)
    assert a.first_difference(Series([1, 2, 3, 4], 3)) is None
    assert a.first_difference(Series([1, 5, 3], 2)) == 1


def test_graded_log_first_slot(hierarchy_nu2):
    z = hierarchy_nu2.z
    log_z = graded_log(z)
    assert log_z[0] == z[0].log()
    assert log_z[1] == z[1] / z[0]
    assert graded_exp(log_z) == z


def test_graded_expansion_requires_one_order():
    with pytest.raises(PreconditionViolation):
        GradedExpansion([Series.one(3), Series.zero(4)])
    with pytest.raises(TruncationError):
        GradedExpansion.zero(3, 1)[2]


def test_w_derivative_at_one():
    # w^3·(1 + s w) → ∂_w at w=1 gives 3 + 4s
    f = MonomialSeries({(0, 3, 0): 1, (1, 4, 0): 1}, 3, 0)
    assert f.w_derivative(1).at_w_one()[0] == Series([3, 4], 3)
    assert f.w_derivative(4).at_w_one()[0] == Series([0, 24], 3)


def test_scheme_offsets():
    z = GradedExpansion([Series([1, 1], 2), Series([0, 1], 2)])
    terms = MonomialSeries.scheme(z, 3).terms
    assert terms == {(0, 1, 0): 1, (1, 3, 0): 1, (1, 1, 1): 1}


def test_bivariate_slice_and_swap():
    a = BivariateSeries({(0, 0): 1, (1, 0): 2, (0, 1): 3, (1, 1): 5}, 2)
    assert a.slice_s2_zero() == Series([1, 2], 2)
    assert a.swapped().coefficient(1, 0) == 3
    assert (a * a).coefficient(1, 1) == 2 * 5 + 2 * 2 * 3


def test_rational_function_reduces():
    # (z^2 - 1)/(z - 1) = z + 1
    r = RationalFunction([-1, 0, 1], [-1, 1])
    assert r.numerator_coefficients() == [1, 1]
    assert r.denominator_coefficients() == [1]
    assert r.evaluate(3) == 4


def test_rational_function_pole_order():
    square = RationalFunction([1], [4, -4, 1])  # 1/(2 - z)^2
    assert square.pole_order(nu_factor(2)) == 2
    with pytest.raises(PreconditionViolation):
        square.evaluate(2)
    with pytest.raises(PreconditionViolation):
        RationalFunction([1], [0])


def test_rational_function_compose_series():
    z0 = Series([1, 12, 288, 8640], 3)
    r = RationalFunction([0, 1], [1])
    assert r.compose_series(z0) == z0


def test_log_extended_function():
    z0 = Series([1, 1], 4)
    f = LogExtendedFunction(2, RationalFunction([0]), Fraction(0), Fraction(1))
    assert f.compose_series(z0) == z0.log()
    g = LogExtendedFunction(2, RationalFunction([0]), Fraction(1), Fraction(0))
    assert g.compose_series(z0) == Series([1, -1], 4).log()


def _random_fraction(rng: np.random.Generator) -> Fraction:
    return Fraction(int(rng.integers(-9, 10)), int(rng.integers(1, 7)))


def _random_series(rng: np.random.Generator, order: int = 6) -> Series:
    return Series([_random_fraction(rng) for _ in range(order + 1)], order)


def _random_monomial(rng: np.random.Generator, order: int = 4, genus: int = 2) -> MonomialSeries:
    terms = {}
    for _ in range(8):
        key = (
            int(rng.integers(0, order + 1)),
            int(rng.integers(-3, 6)),
            int(rng.integers(0, genus + 1)),
        )
        terms[key] = _random_fraction(rng)
    return MonomialSeries(terms, order, genus)


@pytest.mark.parametrize("seed", range(5))
def test_series_ring_axioms(seed):
    rng = np.random.default_rng(seed)
    a, b, c = (_random_series(rng) for _ in range(3))
    one, zero = Series.one(a.order), Series.zero(a.order)
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a * one == a
    assert a + zero == a
    assert a - a == zero


@pytest.mark.parametrize("seed", range(5))
def test_series_inverse_and_division(seed):
    rng = np.random.default_rng(seed)
    a, b = _random_series(rng), _random_series(rng)
    a = a - a[0] + Fraction(int(rng.integers(1, 5)), int(rng.integers(1, 5)))
    one = Series.one(a.order)
    assert a * a.inverse() == one
    assert (b / a) * a == b
    assert a.inverse().inverse() == a


@pytest.mark.parametrize("seed", range(5))
def test_derivative_leibniz_rule(seed):
    rng = np.random.default_rng(seed)
    a, b = _random_series(rng), _random_series(rng)
    assert (a * b).derivative() == a.derivative() * b + a * b.derivative()
    assert (a + b).derivative() == a.derivative() + b.derivative()


@pytest.mark.parametrize("seed", range(5))
@pytest.mark.parametrize("j", [1, 2, 3, 4])
def test_w_derivative_at_one_leibniz_rule(seed, j):
    rng = np.random.default_rng(seed)
    f, g = _random_monomial(rng), _random_monomial(rng)
    expected = GradedExpansion.zero(f.order, f.genus_truncation)
    for i in range(j + 1):
        expected = expected + (
            w_derivative_at_one(f, i) * w_derivative_at_one(g, j - i) * comb(j, i)
        )
    assert w_derivative_at_one(f * g, j) == expected
