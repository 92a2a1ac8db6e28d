from fractions import Fraction

from app.core.exceptions import PreconditionViolation
from app.series.bivariate import BivariateSeries
from app.utils.rational_utils import RationalLike, c_nu, to_fraction


def two_time_z0(nu1: int, nu2: int, order: int) -> BivariateSeries:
    """
    双时间约束 1 = z_0 - c_{ν1}s_1 z_0^{ν1} - c_{ν2}s_2 z_0^{ν2} 的解。

    Branch with z_0(0, 0) = 1 by bivariate fixed-point iteration; each pass fixes one
    more total degree.
    """
    if nu1 < 1 or nu2 < 1:
        raise PreconditionViolation(f"nu1 and nu2 must be >= 1, got {nu1}, {nu2}.")
    s1 = BivariateSeries.monomial(c_nu(nu1), 1, 0, order)
    s2 = BivariateSeries.monomial(c_nu(nu2), 0, 1, order)
    z = BivariateSeries.constant(1, order)
    for _ in range(order + 1):
        z = s1 * z.power(nu1) + s2 * z.power(nu2) + 1
    return z


def two_time_constraint(
    nu1: int, nu2: int, s1: RationalLike, s2: RationalLike, z0: RationalLike
) -> Fraction:
    """Residual z_0 - c_{ν1}s_1 z_0^{ν1} - c_{ν2}s_2 z_0^{ν2} - 1 at a rational point."""
    s1, s2, z0 = to_fraction(s1), to_fraction(s2), to_fraction(z0)
    return z0 - c_nu(nu1) * s1 * z0**nu1 - c_nu(nu2) * s2 * z0**nu2 - 1


def two_time_parameters(
    nu1: int, nu2: int, y0: RationalLike, z0: RationalLike
) -> tuple[Fraction, Fraction]:
    """
    由 s_2=0 切片上的值 y_0 与完整值 z_0 反解 (s_1, s_2)。

    Invert the two-time constraints: y_0 solves the one-time constraint at s_1 and z_0
    the two-time constraint at (s_1, s_2).

    :return: (s_1, s_2)
    """
    y0, z0 = to_fraction(y0), to_fraction(z0)
    if y0 == 0 or z0 == 0:
        raise PreconditionViolation("The two-time inversion is singular at 0.")
    s1 = (y0 - 1) / (c_nu(nu1) * y0**nu1)
    s2 = (y0**nu1 * (z0 - 1) - z0**nu1 * (y0 - 1)) / (c_nu(nu2) * y0**nu1 * z0**nu2)
    return s1, s2
