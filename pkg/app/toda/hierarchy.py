from dataclasses import dataclass
from fractions import Fraction

from app.core.exceptions import ConsistencyFailure, PreconditionViolation
from app.series.graded import GradedExpansion
from app.series.series import Series
from app.toda.forcing import ForcingRoute, check_forcing_routes, forcing_series
from app.utils.logging_utils import configure_logging
from app.utils.rational_utils import c_nu, format_rational

logger = configure_logging(name=__name__)


@dataclass(frozen=True)
class HierarchyState:
    """
    连续 Toda 层级的已解状态 | Solved state of the continuum Toda hierarchy.

    b_k² ≍ k Σ_g z_g(s) k^{-2g}; slots z_0..z_G are stored to s-order N.
    """

    nu: int
    z: GradedExpansion

    @property
    def order(self) -> int:
        return self.z.order

    @property
    def genus(self) -> int:
        return self.z.genus_truncation

    def extended(self, z_g: Series) -> "HierarchyState":
        return HierarchyState(self.nu, GradedExpansion(list(self.z.per_genus) + [z_g]))


def z0_series(nu: int, order: int) -> Series:
    """
    z_0 = 1 + c_ν s z_0^ν 的不动点迭代，每轮多得一个正确系数。

    Fixed-point iteration of z = 1 + c_ν s z^ν; each pass fixes one more coefficient.
    """
    if nu < 2:
        raise PreconditionViolation(f"nu must be >= 2, got {nu}.")
    s = Series.variable(order) * c_nu(nu)
    z = Series.one(order)
    for _ in range(order + 1):
        z = s * z.power(nu) + 1
    return z


def constraint_residual(nu: int, z0: Series) -> Series:
    """z_0 - c_ν s z_0^ν - 1, zero to truncation on the physical branch."""
    return z0 - Series.variable(z0.order) * c_nu(nu) * z0.power(nu) - 1


def solve_zg(state: HierarchyState, g: int, forcing: Series | None = None) -> Series:
    """
    解 (1 - c_ν(ν-1)s z_0^ν) z_g' = c_ν((ν+1-2g)z_0^ν + ν(ν-1)s z_0^{ν-1}z_0') z_g + Forcing_g。

    Solve the linear equation for z_g coefficient by coefficient with z_g(0) = 0:
    (n+1)b_{n+1} = F_n + Σ_i B_i b_{n-i} - Σ_{i>=1} A_i (n+1-i) b_{n+1-i}.

    :param state: 至少包含 z_0..z_{g-1} | Holds at least z_0..z_{g-1}
    :param forcing: 预先算好的强迫项，缺省时用 d_V 路线 | Precomputed forcing, d_V route by default
    """
    if g < 1:
        raise PreconditionViolation(f"solve_zg needs g >= 1, got {g}.")
    nu, order = state.nu, state.order
    c = c_nu(nu)
    z0 = state.z[0]
    z0_nu = z0.power(nu)
    a = (Series.variable(order) * z0_nu) * (-c * (nu - 1)) + 1
    b = (z0_nu * (nu + 1 - 2 * g) + z0.power(nu - 1) * z0.euler() * (nu * (nu - 1))) * c
    f = forcing if forcing is not None else forcing_series(state, g)
    A, B, F = a.coefficients, b.coefficients, f.coefficients
    out = [Fraction(0)] * (order + 1)
    for n in range(order):
        acc = F[n]
        for i in range(n + 1):
            if B[i] and out[n - i]:
                acc += B[i] * out[n - i]
        for i in range(1, n + 1):
            if A[i] and out[n + 1 - i]:
                acc -= A[i] * (n + 1 - i) * out[n + 1 - i]
        out[n + 1] = acc / (n + 1)
    return Series(out, order)


def build_hierarchy(
    nu: int,
    order: int,
    genus: int,
    route: ForcingRoute = "d_V",
    check_routes: bool = False,
) -> HierarchyState:
    """
    依次解出 z_0..z_G | Solve z_0..z_G in sequence.

    :param route: 使用的强迫项路线 | Forcing route used for the solve
    :param check_routes: 每个亏格都对两条路线做精确比对 | Compare both routes exactly at every genus
    """
    if genus < 0 or order < 0:
        raise PreconditionViolation(
            f"Genus and order must be non-negative, got G={genus}, N={order}."
        )
    z0 = z0_series(nu, order)
    residual = constraint_residual(nu, z0)
    if not residual.is_zero():
        index = residual.first_difference(Series.zero(order))
        raise ConsistencyFailure(
            f"z_0 does not satisfy its constraint for nu={nu}.",
            index=f"s^{index}",
            expected="0",
            actual=format_rational(residual[index]),
            provenance=("constraint", "fixed point"),
        )
    state = HierarchyState(nu, GradedExpansion([z0]))
    for g in range(1, genus + 1):
        if check_routes:
            forcing = check_forcing_routes(state, g)
        else:
            forcing = forcing_series(state, g, route)
        state = state.extended(solve_zg(state, g, forcing))
        logger.debug(f"Solved z_{g} for nu={nu} to order {order}.")
    return state
