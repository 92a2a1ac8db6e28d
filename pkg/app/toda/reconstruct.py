"""
z_g 的闭式重建 | Closed-form reconstruction of z_g in terms of z_0.

With u = z_0 - 1 the constraint inverts to s = u/(c_ν(1+u)^ν), so z_g becomes a
series in u. The only allowed pole is at D = ν - (ν-1)z_0 = 1 - (ν-1)u, and
D^{5g-1}·z_g must be a polynomial of degree at most 5g-1+ν.
"""

from fractions import Fraction

import sympy
from sympy import QQ, Poly

from app.core.config import settings
from app.core.exceptions import ReconstructionFailure
from app.series.rational_function import Z0, RationalFunction, nu_factor
from app.series.series import Series
from app.toda.hierarchy import HierarchyState
from app.utils.logging_utils import configure_logging
from app.utils.rational_utils import c_nu, format_rational, to_sympy

logger = configure_logging(name=__name__)


def s_of_u(nu: int, order: int) -> Series:
    """s = u/(c_ν(1+u)^ν) as a series in u."""
    u = Series.variable(order)
    return u * (u + 1).power(-nu) * Fraction(1, c_nu(nu))


def pole_factor_in_u(nu: int, order: int) -> Series:
    """D = 1 - (ν-1)u"""
    return Series([1, -(nu - 1)], order)


def zg_pole_order(g: int) -> int:
    return 5 * g - 1


def zg_degree_bound(nu: int, g: int) -> int:
    return 5 * g - 1 + nu


def required_order(nu: int, g: int, margin: int | None = None) -> int:
    """Series order needed to fit z_g and still have ``margin`` vanishing tail coefficients."""
    if margin is None:
        margin = settings.reconstruction.margin
    return zg_degree_bound(nu, g) + 1 + margin


def in_u(series: Series, nu: int) -> Series:
    """Re-expand a series in s as a series in u = z_0 - 1."""
    return series.compose(s_of_u(nu, series.order))


def polynomial_in_z0(coefficients_in_u: list[Fraction]) -> Poly:
    """Σ p_k (z_0 - 1)^k as a polynomial in z_0."""
    expression = sum(
        (to_sympy(c) * (Z0 - 1) ** k for k, c in enumerate(coefficients_in_u)),
        sympy.Integer(0),
    )
    return Poly(sympy.expand(expression), Z0, domain=QQ)


def pole_power(nu: int, exponent: int) -> Poly:
    """(ν - (ν-1)z_0)^exponent"""
    base = Poly([to_sympy(c) for c in reversed(nu_factor(nu))], Z0, domain=QQ)
    return base**exponent


def reconstruct_zg(
    state: HierarchyState, g: int, margin: int | None = None
) -> RationalFunction:
    """
    将 z_g 重建为 z_0 的有理函数 | Reconstruct z_g as a rational function of z_0.

    :raises ReconstructionFailure: 阶数不足或尾部系数不为零 | Order too small or a non-vanishing tail
    """
    nu = state.nu
    if margin is None:
        margin = settings.reconstruction.margin
    needed = required_order(nu, g, margin)
    if state.order < needed:
        raise ReconstructionFailure(
            f"z_{g} for nu={nu} needs order {needed}, state has {state.order}."
        )
    pole = zg_pole_order(g)
    bound = zg_degree_bound(nu, g)
    numerator = in_u(state.z[g], nu) * pole_factor_in_u(nu, state.order).power(pole)
    tail = [k for k in range(bound + 1, state.order + 1) if numerator[k]]
    if tail:
        k = tail[0]
        raise ReconstructionFailure(
            f"z_{g} for nu={nu}: D^{pole}·z_{g} has u^{k} coefficient "
            f"{format_rational(numerator[k])} beyond degree {bound}."
        )
    result = RationalFunction(
        polynomial_in_z0(list(numerator.coefficients[: bound + 1])),
        pole_power(nu, pole),
    )
    logger.debug(f"Reconstructed z_{g} for nu={nu}: {result}")
    return result
