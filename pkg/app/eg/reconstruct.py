"""
ê_g 的闭式重建 | Closed-form reconstruction of ê_g.

ê_g is fitted as R(z_0) + c·log(ν-(ν-1)z_0) + d·log z_0 with R = P(z_0)/D^m,
D = ν-(ν-1)z_0 = 1-(ν-1)u and u = z_0-1. Multiplying through by D^m turns the
fit into a linear system in the coefficients of P together with c and d.
"""

from fractions import Fraction
from typing import Optional

import sympy
from sympy import Matrix

from app.core.config import settings
from app.core.exceptions import PreconditionViolation, ReconstructionFailure
from app.eg.hierarchy import EgState
from app.equilibrium.e0 import E0Form
from app.series.rational_function import LogExtendedFunction, RationalFunction
from app.series.series import Series
from app.toda.reconstruct import in_u, pole_factor_in_u, pole_power, polynomial_in_z0
from app.utils.logging_utils import configure_logging
from app.utils.rational_utils import to_fraction, to_sympy

logger = configure_logging(name=__name__)

# P(z_0) of the published ê_2, by z_0 power, each a list of ascending ν-power coefficients
_E2_BY_Z0_POWER: list[list[int]] = [
    [0, 0, 0, -1, 5, 8],
    [0, 0, -1, 41, -24, -16],
    [0, 44, -89, 54, -17, 8],
    [-12, -12, 108, -132, 48],
    [-12, 48, -72, 48, -12],
]


def eg_pole_order(g: int) -> int:
    return 0 if g <= 1 else 5 * g - 5


def eg_degree_bound(nu: int, g: int) -> int:
    return eg_pole_order(g) + nu


def eg_required_order(nu: int, g: int, margin: Optional[int] = None) -> int:
    """Unknowns are the P coefficients plus c and d; ``margin`` more equations must hold."""
    if margin is None:
        margin = settings.reconstruction.margin
    return eg_degree_bound(nu, g) + 1 + 2 + margin


def _fit_matrix(
    target: Series, pole: Series, nu: int, degree: int
) -> tuple[Matrix, Matrix]:
    order = target.order
    log_pole = (pole_factor_in_u(nu, order)).log() * pole
    log_z0 = Series([1, 1], order).log() * pole
    rows = []
    for k in range(order + 1):
        row = [sympy.Integer(1 if k == i else 0) for i in range(degree + 1)]
        row += [to_sympy(log_pole[k]), to_sympy(log_z0[k])]
        rows.append(row)
    rhs = Matrix([to_sympy(target[k]) for k in range(order + 1)])
    return Matrix(rows), rhs


def reconstruct_eg(
    state: EgState, g: int, margin: Optional[int] = None
) -> LogExtendedFunction:
    """
    将 ê_g 重建为 R(z_0) + c·log(ν-(ν-1)z_0) + d·log z_0。

    Reconstruct ê_g in the basis {rational, log(ν-(ν-1)z_0), log z_0}.

    :raises ReconstructionFailure: 阶数不足或线性方程组无解 | Order too small or the linear system is inconsistent
    """
    nu = state.nu
    needed = eg_required_order(nu, g, margin)
    if state.order < needed:
        raise ReconstructionFailure(
            f"e_{g} for nu={nu} needs order {needed}, state has {state.order}."
        )
    m = eg_pole_order(g)
    degree = eg_degree_bound(nu, g)
    pole = pole_factor_in_u(nu, state.order).power(m)
    target = in_u(state[g], nu) * pole
    matrix, rhs = _fit_matrix(target, pole, nu, degree)
    try:
        solution, params = matrix.gauss_jordan_solve(rhs)
    except ValueError as exc:
        raise ReconstructionFailure(
            f"e_{g} for nu={nu} has no fit with pole order {m} and degree {degree}."
        ) from exc
    if params.shape[0]:
        solution = solution.subs({p: 0 for p in params})
    values = [to_fraction(v) for v in solution]
    rational = RationalFunction(polynomial_in_z0(values[: degree + 1]), pole_power(nu, m))
    result = LogExtendedFunction(nu, rational, values[degree + 1], values[degree + 2])
    logger.debug(
        f"Reconstructed e_{g} for nu={nu}: {rational}, c={values[degree + 1]}, d={values[degree + 2]}"
    )
    return result


def printed_e0(nu: int) -> LogExtendedFunction:
    """η(z_0-1)(z_0-r) + ½log z_0"""
    form = E0Form.for_nu(nu)
    eta, r = form.eta, form.r
    rational = RationalFunction([eta * r, -eta * (1 + r), eta])
    return LogExtendedFunction(nu, rational, Fraction(0), Fraction(1, 2))


def printed_e1(nu: int) -> LogExtendedFunction:
    """-(1/12)·log(ν-(ν-1)z_0)"""
    return LogExtendedFunction(nu, RationalFunction([0]), Fraction(-1, 12), Fraction(0))


def printed_e2(nu: int) -> RationalFunction:
    """(1/2880)(ν-1)(z_0-1)P(z_0)/(ν-(ν-1)z_0)^5"""
    if nu < 2:
        raise PreconditionViolation(f"nu must be >= 2, got {nu}.")
    coefficients = [
        sum(c * nu**k for k, c in enumerate(row)) for row in _E2_BY_Z0_POWER
    ]
    p = RationalFunction(coefficients)
    prefactor = Fraction(nu - 1, 2880)
    return p * RationalFunction([-1, 1]) * prefactor * RationalFunction(
        [1], pole_power(nu, 5)
    )
