"""
z_g 方程的强迫项 | Forcing terms of the z_g equations.

Two independent routes produce the same series:

* ``walk_sum``: expand Σ_walks [Π f(s, 1+(ℓ+1)/k) - Π f(s, 1+ℓ/k)] in powers of 1/k
  directly from the scheme f(s, w) = Σ_g k^{-2g} w^{1-2g} z_g(w^{ν-1}s);
* ``d_V``: the multinomial Σ_V d_V f^{ν+1-ρ} Π (f^{(j)}/j!)^{r_j} over partitions V of
  2ℓ+1, with d_V counted from the joint distribution of downturn positions.
"""

from fractions import Fraction
from itertools import combinations
from math import factorial, prod
from typing import TYPE_CHECKING, Literal, Sequence

from app.core.exceptions import (
    ConsistencyFailure,
    PreconditionViolation,
    TruncationError,
)
from app.series.graded import GradedExpansion
from app.series.monomial import MonomialSeries, w_derivative_at_one
from app.series.series import Series
from app.toda.walks import PartitionV, enumerate_walks, partitions_of
from app.utils.logging_utils import configure_logging
from app.utils.rational_utils import binomial, c_nu, format_rational, generalized_binomial

if TYPE_CHECKING:
    from app.toda.hierarchy import HierarchyState

logger = configure_logging(name=__name__)

ForcingRoute = Literal["walk_sum", "d_V"]


# ---------------------------------------------------------------------- walk sum


def _shift_table(z: GradedExpansion, nu: int, top_power: int) -> list[list[Series]]:
    """T[g][m] = Σ_n binom(e, m) z_g[n] s^n with e = (ν-1)n + 1 - 2g."""
    table: list[list[Series]] = []
    for g in range(z.genus_truncation + 1):
        row = []
        for m in range(max(top_power - 2 * g, -1) + 1):
            row.append(
                Series(
                    [
                        generalized_binomial((nu - 1) * n + 1 - 2 * g, m) * c
                        for n, c in enumerate(z[g].coefficients)
                    ],
                    z.order,
                )
            )
        table.append(row)
    return table


def _factor(
    table: list[list[Series]], ell: int, top_power: int, order: int
) -> list[Series]:
    """Coefficients of k^{-p}, p = 0..top_power, in f(s, 1 + ℓ/k)."""
    out = [Series.zero(order) for _ in range(top_power + 1)]
    for g, row in enumerate(table):
        for m, t in enumerate(row):
            p = 2 * g + m
            if p <= top_power and not t.is_zero():
                out[p] = out[p] + t * ell**m
    return out


def _multiply(a: Sequence[Series], b: Sequence[Series], top_power: int) -> list[Series]:
    order = a[0].order
    out = [Series.zero(order) for _ in range(top_power + 1)]
    for i, x in enumerate(a):
        if x.is_zero():
            continue
        for j in range(top_power + 1 - i):
            if not b[j].is_zero():
                out[i + j] = out[i + j] + x * b[j]
    return out


def walk_sum_expansion_of(
    z: GradedExpansion, nu: int, top_power: int | None = None
) -> list[Series]:
    """
    Σ_walks [Π_m f(s, 1+(ℓ_m+1)/k) - Π_m f(s, 1+ℓ_m/k)] 按 1/k 的幂展开。

    :param top_power: 最高的 1/k 幂，默认 2G+1 | Highest power of 1/k, 2G+1 by default
    :return: 第 p 项为 k^{-p} 的系数 | Entry p is the coefficient of k^{-p}
    """
    if top_power is None:
        top_power = 2 * z.genus_truncation + 1
    table = _shift_table(z, nu, top_power)
    cache: dict[int, list[Series]] = {}

    def factor(ell: int) -> list[Series]:
        if ell not in cache:
            cache[ell] = _factor(table, ell, top_power, z.order)
        return cache[ell]

    total = [Series.zero(z.order) for _ in range(top_power + 1)]
    for walk in enumerate_walks(nu):
        upper = factor(walk.ell[0] + 1)
        lower = factor(walk.ell[0])
        for ell in walk.ell[1:]:
            upper = _multiply(upper, factor(ell + 1), top_power)
            lower = _multiply(lower, factor(ell), top_power)
        total = [t + u - v for t, u, v in zip(total, upper, lower)]
    return total


def walk_sum_expansion(state: "HierarchyState") -> list[Series]:
    return walk_sum_expansion_of(state.z, state.nu)


def walk_sum_rhs(state: "HierarchyState", g_target: int) -> Series:
    """
    游走和在 k^{-(2g+1)} 处的系数，等于 z_g'。

    The k^{-(2g+1)} coefficient of the walk sum, which equals z_g'. The s^N entry
    is exact because it only involves coefficients up to s^N.
    """
    if g_target < 0 or g_target > state.z.genus_truncation:
        raise TruncationError(
            f"walk_sum_rhs needs z_0..z_{g_target}, state holds genus {state.z.genus_truncation}."
        )
    z = state.z.truncate_genus(g_target)
    return walk_sum_expansion_of(z, state.nu, 2 * g_target + 1)[2 * g_target + 1]


# ---------------------------------------------------------------------- d_V


def d_V_coefficient(nu: int, g: int, V: PartitionV) -> Fraction:
    """
    d_V = (1/Π r_j!) Σ_σ Σ_{i_1<…<i_ρ} Σ_{m_1<…<m_ρ} [Π(i_j-2m_j+2)^{|V_σ(j)|} - Π(i_j-2m_j+1)^{|V_σ(j)|}]·weight

    The weight counts walks whose m_j-th downturn sits at position i_j. The sum over
    σ divided by Π r_j! is the sum over distinct arrangements of the parts.
    """
    if V.size != 2 * g + 1:
        raise PreconditionViolation(
            f"Partition {V.label()} does not sum to 2g+1 = {2 * g + 1}."
        )
    rho = V.rho
    if rho > nu + 1:
        return Fraction(0)
    arrangements = V.arrangements()
    total = 0
    for positions in combinations(range(1, 2 * nu + 1), rho):
        for slots in combinations(range(1, nu + 2), rho):
            weight = binomial(positions[0] - 1, slots[0] - 1) * binomial(
                2 * nu - positions[-1], nu + 1 - slots[-1]
            )
            for k in range(1, rho):
                weight *= binomial(
                    positions[k] - positions[k - 1] - 1, slots[k] - slots[k - 1] - 1
                )
            if not weight:
                continue
            upper = [i - 2 * m + 2 for i, m in zip(positions, slots)]
            lower = [i - 2 * m + 1 for i, m in zip(positions, slots)]
            for arrangement in arrangements:
                total += weight * (
                    prod(u**a for u, a in zip(upper, arrangement))
                    - prod(v**a for v, a in zip(lower, arrangement))
                )
    return Fraction(total)


def d_V_from_walks(nu: int, V: PartitionV) -> Fraction:
    """d_V 的直接游走求和 | d_V summed directly over walks and downturn choices."""
    rho = V.rho
    if rho > nu + 1:
        return Fraction(0)
    arrangements = V.arrangements()
    total = 0
    for walk in enumerate_walks(nu):
        for chosen in combinations(walk.ell, rho):
            for arrangement in arrangements:
                total += prod((ell + 1) ** a for ell, a in zip(chosen, arrangement)) - prod(
                    ell**a for ell, a in zip(chosen, arrangement)
                )
    return Fraction(total)


def printed_monomial_coefficient(nu: int, V: PartitionV) -> Fraction:
    """Coefficient of f^{ν+1-ρ} Π f_{w^{(j)}}^{r_j} with c_ν factored out: d_V/(c_ν Π (j!)^{r_j})."""
    return d_V_coefficient(nu, (V.size - 1) // 2, V) / (c_nu(nu) * V.factorial_weight)


def _zeroed(z: GradedExpansion, g: int) -> GradedExpansion:
    """z_0..z_{g-1} followed by a zero genus-g slot."""
    slots = list(z.truncate_genus(min(g - 1, z.genus_truncation)).per_genus)
    if len(slots) < g:
        raise TruncationError(f"Forcing for genus {g} needs z_0..z_{g - 1}.")
    slots.append(Series.zero(z.order))
    return GradedExpansion(slots)


def _forcing_by_d_V(z: GradedExpansion, nu: int, g: int) -> Series:
    scheme = MonomialSeries.scheme(z, nu)
    derivatives: dict[int, GradedExpansion] = {}

    def derivative(j: int) -> GradedExpansion:
        if j not in derivatives:
            derivatives[j] = w_derivative_at_one(scheme, j) * Fraction(1, factorial(j))
        return derivatives[j]

    f = derivative(0)
    total = Series.zero(z.order)
    for ell in range(g + 1):
        for V in partitions_of(2 * ell + 1):
            if V.rho > nu + 1:
                continue
            d = d_V_coefficient(nu, ell, V)
            if not d:
                continue
            term = f.power(nu + 1 - V.rho)
            for part in V.parts:
                term = term * derivative(part)
            total = total + term[g - ell] * d
    return total


def forcing_series(state: "HierarchyState", g: int, route: ForcingRoute = "d_V") -> Series:
    """
    Forcing_g: 将 z_g 置零后方程右端在亏格 g 的部分。

    Forcing_g, the genus-g part of the right-hand side with z_g set to zero.
    """
    if g < 1:
        raise PreconditionViolation(f"Forcing is defined for g >= 1, got {g}.")
    z = _zeroed(state.z, g)
    if route == "walk_sum":
        return walk_sum_expansion_of(z, state.nu, 2 * g + 1)[2 * g + 1]
    if route == "d_V":
        return _forcing_by_d_V(z, state.nu, g)
    raise PreconditionViolation(f"Unknown forcing route {route!r}.")


def check_forcing_routes(state: "HierarchyState", g: int) -> Series:
    """Both routes must agree exactly; returns the common series."""
    by_walks = forcing_series(state, g, "walk_sum")
    by_partitions = forcing_series(state, g, "d_V")
    index = by_walks.first_difference(by_partitions)
    if index is not None:
        raise ConsistencyFailure(
            f"Forcing routes disagree for nu={state.nu}, g={g}.",
            index=f"s^{index}",
            expected=format_rational(by_walks[index]),
            actual=format_rational(by_partitions[index]),
            provenance=("walk_sum", "d_V"),
        )
    logger.debug(f"Forcing routes agree for nu={state.nu}, g={g} to order {by_walks.order}.")
    return by_walks
