"""
e_g 常微分方程的共振阶与积分常数 | Resonant orders of the e_g ODE and their integration constants.

The recursion λ_n a_n = [s^n]drivers_g loses a_n wherever λ_n vanishes; the count
κ_g(n) = n!·a_n at those orders is taken from a user override, the built-in table,
or a map census, in that order.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Literal, Mapping, Optional

from app.core.config import settings
from app.core.exceptions import PreconditionViolation, UnresolvedConstantError
from app.oracle.census import MapOracle, OracleTask, matching_count
from app.utils.logging_utils import configure_logging
from app.utils.rational_utils import RationalLike, to_fraction

ResonanceSource = Literal["normalization", "user", "table", "oracle"]

# κ_g(n)，键为 (g, ν, n) | κ_g(n) keyed by (g, ν, n)
RESONANCE_TABLE: dict[tuple[int, int, int], int] = {
    (1, 2, 1): 1,
    (2, 2, 2): 0,
    (2, 2, 3): 1440,
    (2, 3, 1): 0,
    (2, 4, 1): 21,
    (3, 2, 4): 0,
    (3, 2, 5): 58060800,
    (3, 3, 2): 0,
    (3, 5, 1): 0,
    (3, 6, 1): 1485,
}


def lambda_n(nu: int, g: int, n: int) -> int:
    """λ_n = ((ν-1)n + 2 - 2g)((ν-1)n + 1 - 2g)"""
    e = (nu - 1) * n + 2 - 2 * g
    return e * (e - 1)


def lambda_expanded(nu: int, g: int, n: int) -> int:
    """The unfactored multiplier (2-2g)(1-2g) + (ν-1)(ν+2-4g)n + (ν-1)²n(n-1)."""
    return (
        (2 - 2 * g) * (1 - 2 * g)
        + (nu - 1) * (nu + 2 - 4 * g) * n
        + (nu - 1) ** 2 * n * (n - 1)
    )


def resonant_orders(nu: int, g: int) -> tuple[int, ...]:
    """{n >= 0 : (ν-1)n ∈ {2g-2, 2g-1}}"""
    if nu < 2:
        raise PreconditionViolation(f"nu must be >= 2, got {nu}.")
    return tuple(
        target // (nu - 1)
        for target in (2 * g - 2, 2 * g - 1)
        if target >= 0 and target % (nu - 1) == 0
    )


@dataclass(frozen=True)
class ResonantValue:
    """
    :param n: 共振阶 | Resonant order
    :param value: κ_g(n) = n!·a_n
    :param source: 数值来源 | Where the value came from
    """

    n: int
    value: int
    source: ResonanceSource

    @property
    def coefficient(self) -> Fraction:
        """a_n = κ_g(n)/n!"""
        return Fraction(self.value, factorial(self.n))

    def to_payload(self) -> dict:
        return {"n": self.n, "value": str(self.value), "source": self.source}


@dataclass(frozen=True)
class Resonance:
    g: int
    nu: int
    resonant_orders: tuple[int, ...]
    sources: tuple[ResonantValue, ...] = field(default_factory=tuple)

    def value_at(self, n: int) -> Optional[ResonantValue]:
        for resolved in self.sources:
            if resolved.n == n:
                return resolved
        return None

    def to_payload(self) -> dict:
        return {
            "g": self.g,
            "nu": self.nu,
            "orders": list(self.resonant_orders),
            "sources": [v.to_payload() for v in self.sources],
        }


class ResonanceResolver:
    """
    共振常数解析器 | Resolves resonant constants.

    Order of precedence: ê_g(0) = 0 at n = 0, then user overrides, then
    :data:`RESONANCE_TABLE`, then a map census when (2νn-1)!! is within budget.
    """

    def __init__(
        self,
        overrides: Optional[Mapping[tuple[int, int, int], RationalLike]] = None,
        oracle: Optional[MapOracle] = None,
        budget: Optional[int] = None,
        force: bool = False,
    ) -> None:
        """
        :param overrides: 用户给定的 κ_g(n)，键为 (g, ν, n) | User-supplied κ_g(n) keyed by (g, ν, n)
        :param oracle: 地图枚举器，缺省时按配置创建 | Map oracle, built from settings when omitted
        :param budget: 允许自动枚举的最大配对数 | Largest matching count enumerated automatically
        :param force: 忽略预算 | Ignore the budget
        """
        self.overrides = {key: to_fraction(v) for key, v in (overrides or {}).items()}
        self.oracle = oracle
        self.budget = settings.oracle.matching_budget if budget is None else budget
        self.force = force
        self.logger = configure_logging(name=__name__)

    def resolve_order(self, nu: int, g: int, n: int) -> ResonantValue:
        if n == 0:
            return ResonantValue(0, 0, "normalization")
        key = (g, nu, n)
        if key in self.overrides:
            value = self.overrides[key]
            if value.denominator != 1 or value < 0:
                raise PreconditionViolation(
                    f"Override for (g={g}, nu={nu}, n={n}) must be a nonnegative integer, got {value}."
                )
            return self._report(g, nu, ResonantValue(n, int(value), "user"))
        if key in RESONANCE_TABLE:
            return self._report(g, nu, ResonantValue(n, RESONANCE_TABLE[key], "table"))
        task = OracleTask(nu, n)
        estimate = matching_count(task)
        if estimate <= self.budget or self.force:
            oracle = self.oracle or MapOracle()
            value = oracle.census(task, force=True).count(g)
            return self._report(g, nu, ResonantValue(n, value, "oracle"))
        raise UnresolvedConstantError(
            f"Resonant constant kappa_{g}({n}) for nu={nu} is not tabulated and its census "
            f"needs {estimate} matchings, above the budget {self.budget}.",
            genus=g,
            nu=nu,
            order=n,
        )

    def resolve(self, nu: int, g: int, order: Optional[int] = None) -> Resonance:
        """Resolve every resonant order of (g, ν), or only those up to ``order``."""
        orders = resonant_orders(nu, g)
        needed = [n for n in orders if order is None or n <= order]
        return Resonance(
            g, nu, orders, tuple(self.resolve_order(nu, g, n) for n in needed)
        )

    def _report(self, g: int, nu: int, resolved: ResonantValue) -> ResonantValue:
        self.logger.info(
            f"Resonance g={g}, nu={nu}, n={resolved.n}: kappa={resolved.value} ({resolved.source})."
        )
        return resolved
