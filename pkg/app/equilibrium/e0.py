"""
e_0 的闭式与泰勒系数 | Closed form of e_0 and its Taylor coefficients.

The closed form in z, its assembly from the equilibrium-measure pieces, and the
three coefficient sequences ζ_j, L_j, U_{2,j} that turn it into κ_0(n).
"""

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from app.core.exceptions import PreconditionViolation
from app.equilibrium.measure import (
    LogLinear,
    gaussian_energy,
    lagrange_multiplier,
    potential_moment,
)
from app.utils.logging_utils import configure_logging
from app.utils.rational_utils import RationalLike, binomial, c_nu, to_fraction

logger = configure_logging(name=__name__)


@dataclass(frozen=True)
class E0Form:
    """e_0 = η(z-1)(z-r) + ½log z"""

    eta: Fraction
    r: Fraction

    @classmethod
    def for_nu(cls, nu: int) -> "E0Form":
        if nu < 2:
            raise PreconditionViolation(f"nu must be >= 2, got {nu}.")
        return cls(
            eta=Fraction((nu - 1) ** 2, 4 * nu * (nu + 1)),
            r=Fraction(3 * (nu + 1), nu - 1),
        )

    def rational_part(self, z: RationalLike) -> Fraction:
        z = to_fraction(z)
        return self.eta * (z - 1) * (z - self.r)


def e0_closed_form(nu: int, z: RationalLike) -> tuple[Fraction, Fraction]:
    """
    :return: (η(z-1)(z-r), z)，即 e_0 = 有理部分 + ½log z | (η(z-1)(z-r), z), i.e. e_0 = rational part + ½log z
    """
    z = to_fraction(z)
    if z <= 0:
        raise PreconditionViolation(f"e_0 needs z > 0, got {z}.")
    return E0Form.for_nu(nu).rational_part(z), z


def e0_closed_form_value(nu: int, z: RationalLike) -> LogLinear:
    rational, argument = e0_closed_form(nu, z)
    return LogLinear(rational) + LogLinear.log_of(argument, Fraction(1, 2))


def e0_assembly(nu: int, x: RationalLike, z: RationalLike) -> LogLinear:
    """e_0 = -(V,ψ)/(2x) + (-l)/2 - E_0"""
    x = to_fraction(x)
    moment = potential_moment(nu, x, z)
    rational, argument = lagrange_multiplier(nu, x, z)
    minus_l = LogLinear(rational) + LogLinear.log_of(argument)
    return LogLinear(-moment / (2 * x)) + minus_l * Fraction(1, 2) - gaussian_energy(x, nu)


def e0_assembly_check(nu: int, x: RationalLike, z: RationalLike) -> bool:
    assembled = e0_assembly(nu, x, z)
    closed = e0_closed_form_value(nu, z)
    if assembled != closed:
        logger.warning(
            f"e_0 assembly mismatch at nu={nu}, x={x}, z={z}: {assembled} != {closed}"
        )
        return False
    return True


def zeta_j(nu: int, j: int) -> Fraction:
    """高阶卡塔兰数 ζ_j = (1/j)·binom(νj, j-1) | Higher Catalan number ζ_j."""
    if j < 1:
        raise PreconditionViolation(f"zeta_j needs j >= 1, got {j}.")
    return Fraction(binomial(nu * j, j - 1), j)


def log_coeff_L(nu: int, j: int) -> Fraction:
    """L_j = (1/j)·binom(νj-1, j-1), the coefficients of log z."""
    if j < 1:
        raise PreconditionViolation(f"L_j needs j >= 1, got {j}.")
    return Fraction(binomial(nu * j - 1, j - 1), j)


def quad_coeff_U2(nu: int, j: int) -> Fraction:
    """U_{2,j} = (2/j)·binom(νj, j-2), the coefficients of (z-1)²."""
    if j < 1:
        raise PreconditionViolation(f"U_2,j needs j >= 1, got {j}.")
    return Fraction(2 * binomial(nu * j, j - 2), j)


def kappa0(nu: int, n: int) -> Fraction:
    """κ_0(n) = c_ν^n·(νn-1)!/((ν-1)n+2)!"""
    if n < 1:
        raise PreconditionViolation(f"kappa_0 needs n >= 1, got {n}.")
    return Fraction(
        c_nu(nu) ** n * factorial(nu * n - 1), factorial((nu - 1) * n + 2)
    )


def e0_taylor_coefficient(nu: int, j: int) -> Fraction:
    """[s^j]ê_0 = c_ν^j·[η(U_{2,j} + (1-r)ζ_j) + ½L_j]"""
    form = E0Form.for_nu(nu)
    inner = form.eta * (quad_coeff_U2(nu, j) + (1 - form.r) * zeta_j(nu, j))
    return c_nu(nu) ** j * (inner + log_coeff_L(nu, j) / 2)
