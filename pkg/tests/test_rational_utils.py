from fractions import Fraction

import pytest
import sympy

from app.utils.rational_utils import (
    binomial,
    c_nu,
    falling_factorial,
    format_rational,
    generalized_binomial,
    prime_log_basis,
    to_fraction,
)


def test_c_nu():
    assert c_nu(2) == 12
    assert c_nu(3) == 60
    assert c_nu(4) == 280


def test_to_fraction_accepts_every_form():
    assert to_fraction("3/4") == Fraction(3, 4)
    assert to_fraction(5) == Fraction(5)
    assert to_fraction(sympy.Rational(-2, 6)) == Fraction(-1, 3)
    with pytest.raises(TypeError):
        to_fraction(True)
    with pytest.raises(TypeError):
        to_fraction(0.5)


def test_format_rational():
    assert format_rational(Fraction(-1, 12)) == "-1/12"
    assert format_rational(Fraction(6, 3)) == "2"


def test_prime_log_basis():
    assert prime_log_basis(Fraction(12, 5)) == {2: 2, 3: 1, 5: -1}
    assert prime_log_basis(1) == {}
    with pytest.raises(ValueError):
        prime_log_basis(0)


def test_binomials():
    assert binomial(4, 5) == 0
    assert binomial(-1, 0) == 0
    assert falling_factorial(-2, 3) == -24
    assert generalized_binomial(-1, 3) == -1
    assert generalized_binomial(5, 2) == 10
