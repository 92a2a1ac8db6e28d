"""
ê_g(s) = e_g(-s) 的二阶方程逐系数求解 | Coefficient-wise solve of the second-order equation for ê_g(s) = e_g(-s).

Acting on w^{2-2g}ê_g(w^{ν-1}s), ∂_w² at w = 1 multiplies the s^n coefficient by
λ_n; everything else in the genus-g equation is known from lower genera and the
graded log of the z expansion, and collects into the drivers.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Optional

from app.core.exceptions import (
    ConsistencyFailure,
    PreconditionViolation,
    TruncationError,
    UnresolvedConstantError,
)
from app.eg.resonance import Resonance, ResonanceResolver, lambda_n
from app.series.graded import GradedExpansion, graded_log
from app.series.monomial import MonomialSeries
from app.series.series import Series
from app.toda.hierarchy import HierarchyState
from app.utils.logging_utils import configure_logging
from app.utils.rational_utils import format_rational

logger = configure_logging(name=__name__)


@dataclass(frozen=True)
class EgState:
    """
    :param e_hat: ê_0..ê_G
    :param resonances: 每个亏格的共振常数及其来源 | Resonant constants and their sources, one per genus
    """

    nu: int
    order: int
    genus: int
    e_hat: tuple[Series, ...]
    resonances: tuple[Resonance, ...] = field(default_factory=tuple)

    def __getitem__(self, g: int) -> Series:
        if g < 0 or g > self.genus:
            raise TruncationError(f"e_{g} requested, state holds genus <= {self.genus}.")
        return self.e_hat[g]

    def e_of_t(self, g: int) -> Series:
        """e_g(t) = Σ (-1)^n a_n t^n"""
        return Series(
            [c if n % 2 == 0 else -c for n, c in enumerate(self[g].coefficients)],
            self.order,
        )


def _lifted_derivative(e_hat: Series, nu: int, weight: int, j: int) -> Series:
    """∂_w^j [w^weight·ê(w^{ν-1}s)] at w = 1."""
    lifted = MonomialSeries(
        {(n, (nu - 1) * n + weight, 0): c for n, c in enumerate(e_hat.coefficients)},
        e_hat.order,
        0,
    )
    return lifted.w_derivative(j).at_w_one()[0]


def drivers(
    hierarchy: HierarchyState,
    e_hat: tuple[Series, ...] | list[Series],
    g: int,
    log_z: Optional[GradedExpansion] = None,
) -> Series:
    """
    -Σ_{n=1}^{g} 2/(2n+2)!·∂_w^{2n+2}[w^{2-2(g-n)}ê_{g-n}(w^{ν-1}s)]|_{w=1} + (log z)_g

    :param e_hat: 至少包含 ê_0..ê_{g-1} | Holds at least ê_0..ê_{g-1}
    :param log_z: 预先算好的 graded_log(z) | Precomputed graded_log(z)
    """
    if g < 0:
        raise PreconditionViolation(f"Genus must be non-negative, got {g}.")
    if hierarchy.genus < g:
        raise TruncationError(
            f"drivers for genus {g} need z_0..z_{g}, hierarchy holds genus {hierarchy.genus}."
        )
    if len(e_hat) < g:
        raise TruncationError(f"drivers for genus {g} need e_0..e_{g - 1}.")
    log_z = log_z if log_z is not None else graded_log(hierarchy.z)
    result = log_z[g]
    for n in range(1, g + 1):
        j = 2 * n + 2
        term = _lifted_derivative(e_hat[g - n], hierarchy.nu, 2 - 2 * (g - n), j)
        result = result - term * Fraction(2, factorial(j))
    return result


def solve_eg(
    nu: int, g: int, driving: Series, resonance: Resonance
) -> Series:
    """
    λ_n·a_n = [s^n]drivers_g；在共振阶断言右侧为零并取外部常数。

    Solve λ_n a_n = [s^n]drivers_g. At a resonant order the drivers coefficient must
    be exactly zero and a_n comes from ``resonance``.

    :raises ConsistencyFailure: 共振阶处驱动项不为零 | Nonzero drivers at a resonant order
    """
    out: list[Fraction] = []
    for n, d in enumerate(driving.coefficients):
        lam = lambda_n(nu, g, n)
        if lam:
            out.append(d / lam)
            continue
        if d:
            raise ConsistencyFailure(
                f"Drivers of e_{g} for nu={nu} do not vanish at resonant order {n}.",
                index=f"s^{n}",
                expected="0",
                actual=format_rational(d),
                provenance=("solvability", "drivers"),
            )
        resolved = resonance.value_at(n)
        if resolved is None:
            raise UnresolvedConstantError(
                f"Resonant order {n} of e_{g} for nu={nu} has no resolved constant.",
                genus=g,
                nu=nu,
                order=n,
            )
        out.append(resolved.coefficient)
    return Series(out, driving.order)


def build_eg(
    hierarchy: HierarchyState,
    genus: Optional[int] = None,
    resolver: Optional[ResonanceResolver] = None,
) -> EgState:
    """
    依次解出 ê_0..ê_G | Solve ê_0..ê_G in sequence.

    :param hierarchy: 至少解到亏格 G 的 z 展开 | z expansion solved through genus G
    :param resolver: 共振常数来源 | Source of resonant constants
    """
    genus = hierarchy.genus if genus is None else genus
    if genus > hierarchy.genus:
        raise TruncationError(
            f"e_{genus} needs z through genus {genus}, hierarchy holds {hierarchy.genus}."
        )
    resolver = resolver or ResonanceResolver()
    nu, order = hierarchy.nu, hierarchy.order
    log_z = graded_log(hierarchy.z.truncate_genus(genus))
    e_hat: list[Series] = []
    resonances: list[Resonance] = []
    for g in range(genus + 1):
        resonance = resolver.resolve(nu, g, order)
        driving = drivers(hierarchy, e_hat, g, log_z)
        e_hat.append(solve_eg(nu, g, driving, resonance))
        resonances.append(resonance)
        logger.debug(f"Solved e_{g} for nu={nu} to order {order}.")
    return EgState(nu, order, genus, tuple(e_hat), tuple(resonances))


def kappa(state: EgState, g: int, n: int) -> int:
    """
    κ_g(n) = n!·[s^n]ê_g

    :raises ConsistencyFailure: 结果不是非负整数 | The value is not a nonnegative integer
    """
    if n > state.order:
        raise TruncationError(f"kappa_{g}({n}) needs order {n}, state has {state.order}.")
    value = state[g][n] * factorial(n)
    if value.denominator != 1 or value < 0:
        raise ConsistencyFailure(
            f"kappa_{g}({n}) for nu={state.nu} is not a nonnegative integer.",
            index=f"n={n}",
            expected="nonnegative integer",
            actual=format_rational(value),
            provenance=("map count", "n!·[s^n]e_g"),
        )
    return int(value)
