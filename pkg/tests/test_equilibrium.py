from fractions import Fraction

import pytest

from app.core.exceptions import InvalidParameters, PreconditionViolation
from app.equilibrium import (
    EquilibriumParams,
    LogLinear,
    appendix_S_check,
    e0_assembly_check,
    e0_closed_form_value,
    e0_taylor_coefficient,
    gaussian_energy,
    kappa0,
    lagrange_multiplier,
    lagrange_multiplier_from_moments,
    mass_constraint,
    potential_moment,
    potential_moment_from_coefficients,
    zeta_j,
)

HALF = Fraction(1, 2)
GRID = [Fraction(1, 4), HALF, Fraction(3, 4), Fraction(1), Fraction(5, 4)]


def test_mass_constraint():
    assert mass_constraint(2, 1, HALF) == Fraction(1, 6)
    assert mass_constraint(3, 1, 1) == 0
    with pytest.raises(PreconditionViolation):
        mass_constraint(2, 1, 0)


def test_potential_moment_routes():
    assert potential_moment(2, 1, HALF) == Fraction(19, 48)
    for nu in (2, 3):
        for z in GRID:
            assert potential_moment_from_coefficients(nu, 1, z) == potential_moment(nu, 1, z)


@pytest.mark.parametrize("nu", [2, 3, 4, 5])
def test_lagrange_multiplier_routes(nu):
    for x in (Fraction(1), Fraction(3, 2)):
        for z in GRID:
            direct = lagrange_multiplier(nu, x, z)
            moments = lagrange_multiplier_from_moments(nu, x, z)
            assert direct == moments


def test_e0_closed_form_value():
    expected = LogLinear(Fraction(17, 96)) + LogLinear.log_of(HALF, HALF)
    assert e0_closed_form_value(2, HALF) == expected
    assert e0_closed_form_value(2, HALF).log_coefficient(2) == -HALF


def test_gaussian_energy():
    for x in (Fraction(1), Fraction(2), Fraction(9, 4)):
        assert gaussian_energy(x) == LogLinear(Fraction(-3, 4)) + LogLinear.log_of(x, HALF)
    assert gaussian_energy(1, nu=5) == LogLinear(Fraction(-3, 4))


@pytest.mark.parametrize("nu", [2, 3, 4, 5, 6])
def test_e0_assembly(nu):
    for x in (Fraction(1), Fraction(5, 3)):
        for z in GRID:
            assert e0_assembly_check(nu, x, z)


def test_kappa0():
    assert [kappa0(2, n) for n in range(1, 5)] == [2, 36, 1728, 145152]
    with pytest.raises(PreconditionViolation):
        kappa0(2, 0)


@pytest.mark.parametrize("nu", [2, 3, 4])
def test_taylor_coefficients_match_kappa0(nu):
    factorial = 1
    for j in range(1, 7):
        factorial *= j
        assert e0_taylor_coefficient(nu, j) * factorial == kappa0(nu, j)


def test_zeta_is_catalan_for_quadrangulations():
    assert [zeta_j(2, j) for j in range(1, 6)] == [1, 2, 5, 14, 42]


def test_appendix_closed_forms():
    assert appendix_S_check(2, 6, 3, 4)
    assert appendix_S_check(2, 6, Fraction(5, 2), 1)
    assert appendix_S_check(3, 6, Fraction(7, 3), 2)
    with pytest.raises(PreconditionViolation):
        appendix_S_check(2, 3, 1, 4)


def test_params_validation():
    params = EquilibriumParams(2, HALF)
    assert params.t == Fraction(1, 6)
    assert params.beta_sq == 2
    assert params.is_physical
    assert not EquilibriumParams(2, Fraction(3)).is_physical
    with pytest.raises(InvalidParameters):
        EquilibriumParams(1, HALF)
    with pytest.raises(InvalidParameters):
        EquilibriumParams(2, Fraction(-1))
