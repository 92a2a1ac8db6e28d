from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Mapping, Optional

from app.core.config import settings
from app.core.exceptions import ConsistencyFailure, ReconstructionFailure
from app.eg.hierarchy import EgState, build_eg, kappa
from app.eg.reconstruct import eg_required_order, reconstruct_eg
from app.eg.resonance import ResonanceResolver
from app.oracle.census import MapCensus, MapOracle, OracleTask
from app.series.bivariate import BivariateSeries
from app.series.graded import GradedExpansion
from app.series.rational_function import LogExtendedFunction, RationalFunction
from app.toda.forcing import ForcingRoute
from app.toda.hierarchy import HierarchyState, build_hierarchy
from app.toda.reconstruct import reconstruct_zg, required_order
from app.toda.two_time import two_time_z0
from app.utils.logging_utils import configure_logging, log_elapsed
from app.utils.rational_utils import RationalLike, format_rational


@dataclass(frozen=True)
class KappaEntry:
    n: int
    value: int
    # recursion, normalization, user, table 或 oracle | recursion, normalization, user, table or oracle
    source: str


def integer_count(value: Fraction, label: str) -> int:
    """
    地图计数必须是非负整数 | A map count must be a nonnegative integer.

    :raises ConsistencyFailure: 出现分数或负数 | The value is fractional or negative
    """
    if value.denominator != 1 or value < 0:
        raise ConsistencyFailure(
            f"{label} is not a nonnegative integer.",
            index=label,
            expected="nonnegative integer",
            actual=format_rational(value),
            provenance=("map count", "n!·[s^n]z_g"),
        )
    return int(value)


class EngineService:
    """
    计算引擎服务类，缓存已解出的层级并向命令行与交叉校验提供结果。

    Engine service: memoises solved hierarchies per ν and serves the command line and
    the crosscheck battery. Solved series are exact, so a state solved to a larger
    (order, genus) answers every smaller request by truncation.
    """

    def __init__(
        self,
        threads: Optional[int] = None,
        force: bool = False,
        overrides: Optional[Mapping[tuple[int, int, int], RationalLike]] = None,
        route: ForcingRoute = "d_V",
    ) -> None:
        """
        :param threads: 地图枚举线程数 | Oracle worker threads
        :param force: 允许超出预算的枚举 | Allow oracle runs above the budget
        :param overrides: 用户给定的共振常数 | User-supplied resonant constants
        :param route: z_g 求解使用的强迫项路线 | Forcing route for the z_g solve
        """
        # 配置日志记录器 | Configure logger
        self.logger = configure_logging(name=__name__)

        # 地图枚举器 | Map oracle
        self.oracle = MapOracle(threads=threads)
        self.force = force

        # 共振常数解析器 | Resonance resolver
        self.resolver = ResonanceResolver(
            overrides=overrides, oracle=self.oracle, force=force
        )
        self.route: ForcingRoute = route

        self._hierarchies: dict[int, HierarchyState] = {}
        self._eg_states: dict[int, EgState] = {}

    # ------------------------------------------------------------------ hierarchy

    def hierarchy(self, nu: int, order: int, genus: int) -> HierarchyState:
        cached = self._hierarchies.get(nu)
        if cached is None or cached.order < order or cached.genus < genus:
            top_order = max(order, cached.order if cached else 0)
            top_genus = max(genus, cached.genus if cached else 0)
            with log_elapsed(
                self.logger, f"z hierarchy nu={nu}, order {top_order}, genus {top_genus}"
            ):
                cached = build_hierarchy(nu, top_order, top_genus, route=self.route)
            self._hierarchies[nu] = cached
        return self._truncated(cached, order, genus)

    @staticmethod
    def _truncated(state: HierarchyState, order: int, genus: int) -> HierarchyState:
        if state.order == order and state.genus == genus:
            return state
        z: GradedExpansion = state.z.truncate_genus(genus).truncate(order)
        return HierarchyState(state.nu, z)

    def eg_state(self, nu: int, order: int, genus: int) -> EgState:
        cached = self._eg_states.get(nu)
        if cached is None or cached.order < order or cached.genus < genus:
            top_order = max(order, cached.order if cached else 0)
            top_genus = max(genus, cached.genus if cached else 0)
            hierarchy = self.hierarchy(nu, top_order, top_genus)
            with log_elapsed(
                self.logger, f"eg hierarchy nu={nu}, order {top_order}, genus {top_genus}"
            ):
                cached = build_eg(hierarchy, top_genus, self.resolver)
            self._eg_states[nu] = cached
        if cached.order == order and cached.genus == genus:
            return cached
        return EgState(
            nu,
            order,
            genus,
            tuple(e.truncate(order) for e in cached.e_hat[: genus + 1]),
            cached.resonances[: genus + 1],
        )

    # ------------------------------------------------------------------ tables

    def kappa_table(self, nu: int, genus: int, max_order: int) -> list[KappaEntry]:
        """κ_g(n) for n = 1..max_order with the provenance of each value."""
        state = self.eg_state(nu, max_order, genus)
        resonance = state.resonances[genus]
        entries = []
        for n in range(1, max_order + 1):
            resolved = resonance.value_at(n)
            source = resolved.source if resolved else "recursion"
            entries.append(KappaEntry(n, kappa(state, genus, n), source))
        return entries

    def two_leg_counts(self, nu: int, genus: int, max_order: int) -> list[int]:
        """n!·[s^n]z_g for n = 1..max_order"""
        z_g = self.hierarchy(nu, max_order, genus).z[genus]
        return [
            integer_count(z_g[n] * factorial(n), f"two-leg count nu={nu}, g={genus}, n={n}")
            for n in range(1, max_order + 1)
        ]

    # ------------------------------------------------------------------ closed forms

    def zg_closed_form(self, nu: int, g: int) -> Optional[RationalFunction]:
        """z_g as a rational function of z_0, or None when the fit fails."""
        state = self.hierarchy(nu, required_order(nu, g), g)
        try:
            return reconstruct_zg(state, g)
        except ReconstructionFailure as exc:
            self.logger.warning(f"{exc.message} Falling back to the series.")
            return None

    def eg_closed_form(self, nu: int, g: int) -> Optional[LogExtendedFunction]:
        """ê_g in the rational-plus-logs basis, or None when the fit fails."""
        state = self.eg_state(nu, eg_required_order(nu, g), g)
        try:
            return reconstruct_eg(state, g)
        except ReconstructionFailure as exc:
            self.logger.warning(f"{exc.message} Falling back to the series.")
            return None

    # ------------------------------------------------------------------ oracle

    def census(
        self, nu: int, vertices: int, legs: int = 0, force: Optional[bool] = None
    ) -> MapCensus:
        force = self.force if force is None else force
        return self.oracle.census(OracleTask(nu, vertices, legs), force=force)

    # ------------------------------------------------------------------ two-time

    def two_time(self, nu1: int, nu2: int, order: Optional[int] = None) -> BivariateSeries:
        order = settings.hierarchy.default_order if order is None else order
        return two_time_z0(nu1, nu2, order)
