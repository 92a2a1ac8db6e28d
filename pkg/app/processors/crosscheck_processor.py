from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Callable, Optional

from app.core.config import settings
from app.core.exceptions import ConsistencyFailure, EngineError
from app.eg.hierarchy import drivers, kappa
from app.eg.reconstruct import printed_e0, printed_e1, printed_e2
from app.eg.resonance import lambda_expanded, lambda_n, resonant_orders
from app.equilibrium.appendix import appendix_S_check
from app.equilibrium.e0 import (
    e0_assembly_check,
    e0_taylor_coefficient,
    kappa0,
    zeta_j,
)
from app.equilibrium.measure import (
    lagrange_multiplier,
    lagrange_multiplier_from_moments,
    potential_moment,
    potential_moment_from_coefficients,
)
from app.oracle.census import MapOracle, OracleTask, matching_count
from app.series.series import Series
from app.services.engine_service import EngineService
from app.toda.forcing import check_forcing_routes, d_V_coefficient, d_V_from_walks
from app.toda.hierarchy import z0_series
from app.toda.printed import (
    compare_forcing_families,
    compare_printed_zg,
    printed_z1,
    printed_z_forms,
    printed_zeta1,
)
from app.toda.reconstruct import required_order
from app.toda.two_time import two_time_constraint, two_time_parameters
from app.toda.walks import partitions_of
from app.utils.logging_utils import configure_logging
from app.utils.rational_utils import c_nu, format_rational

# e_0 组装检查使用的 z 网格 | z grid for the e_0 assembly check
E0_GRID = (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), Fraction(1), Fraction(5, 4))
# Appendix 检查的 (λ, β²) 取样点 | (λ, β²) sample points for the endpoint-expansion check
APPENDIX_SAMPLES = ((Fraction(3), Fraction(4)), (Fraction(5, 2), Fraction(1)), (Fraction(2), Fraction(3, 2)))
# 两时间检查使用的取值点 (y_0, z_0) | (y_0, z_0) points for the two-time inversion
TWO_TIME_POINTS = ((Fraction(3, 2), Fraction(2)), (Fraction(5, 4), Fraction(4, 3)))


@dataclass
class CheckOutcome:
    name: str
    passed: bool
    detail: str = ""
    error: Optional[EngineError] = None


@dataclass
class CrosscheckReport:
    nu: int
    genus: int
    order: int
    outcomes: list[CheckOutcome] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(outcome.passed for outcome in self.outcomes)

    @property
    def first_failure(self) -> Optional[CheckOutcome]:
        return next((o for o in self.outcomes if not o.passed), None)


def _require_series(
    label: str, expected: Series, actual: Series, provenance: tuple[str, str]
) -> None:
    index = expected.first_difference(actual)
    if index is not None:
        raise ConsistencyFailure(
            f"{label} disagrees.",
            index=f"s^{index}",
            expected=format_rational(expected[index]),
            actual=format_rational(actual[index]),
            provenance=provenance,
        )


def _require_equal(
    label: str, index: str, expected: object, actual: object, provenance: tuple[str, str]
) -> None:
    if expected != actual:
        raise ConsistencyFailure(
            f"{label} disagrees.",
            index=index,
            expected=str(expected),
            actual=str(actual),
            provenance=provenance,
        )


class CrosscheckProcessor:
    """
    交叉校验处理器，对同一个 ν 运行全部精确比对。

    Runs the invariant battery for one ν at a requested (genus, order) scale. Every
    check compares two independent exact routes and raises ``ConsistencyFailure`` on
    the first difference; the processor records each outcome and carries on.
    """

    def __init__(
        self, engine: Optional[EngineService] = None, oracle_budget: Optional[int] = None
    ) -> None:
        """
        :param engine: 共享的引擎服务 | Shared engine service
        :param oracle_budget: 自动枚举的最大配对数 | Largest census started automatically
        """
        self.engine = engine or EngineService()
        self.oracle_budget = (
            settings.oracle.crosscheck_budget if oracle_budget is None else oracle_budget
        )
        self.logger = configure_logging(name=__name__)

    def run(self, nu: int, genus: int, order: int) -> CrosscheckReport:
        report = CrosscheckReport(nu, genus, order)
        checks: list[tuple[str, Callable[[], str]]] = [
            ("zeta_closed_form", lambda: self.check_zeta(nu, order)),
            ("forcing_routes", lambda: self.check_forcing_routes(nu, genus, order)),
            ("d_V_routes", lambda: self.check_d_V_routes(nu, genus)),
            ("forcing_families", lambda: self.check_forcing_families(nu, genus)),
            ("kappa0_routes", lambda: self.check_kappa0(nu, order)),
            ("e_hat_closed_forms", lambda: self.check_e_hat_closed_forms(nu, genus, order)),
            ("kappa_integrality", lambda: self.check_kappa_integrality(nu, genus, order)),
            ("lambda_factorization", lambda: self.check_lambda(nu, genus, order)),
            ("resonance_solvability", lambda: self.check_solvability(nu, genus, order)),
            ("oracle_vs_kappa", lambda: self.check_oracle_kappa(nu, genus, order)),
            ("two_leg_identity", lambda: self.check_two_leg(nu, genus, order)),
            ("oracle_invariance", lambda: self.check_oracle_invariance(nu)),
            ("zg_reconstruction", lambda: self.check_zg_reconstruction(nu, genus)),
            ("printed_displays", lambda: self.report_printed_displays(nu, genus, order)),
            ("e0_assembly", lambda: self.check_e0_assembly(nu)),
            ("equilibrium_routes", lambda: self.check_equilibrium_routes(nu)),
            ("endpoint_expansion", lambda: self.check_appendix(nu)),
            ("two_time", lambda: self.check_two_time(nu, order)),
        ]
        for name, check in checks:
            report.outcomes.append(self._run_check(name, check))
        return report

    def _run_check(self, name: str, check: Callable[[], str]) -> CheckOutcome:
        try:
            detail = check()
        except EngineError as exc:
            self.logger.error(f"Crosscheck {name} failed: {exc}")
            return CheckOutcome(name, False, str(exc), exc)
        self.logger.info(f"Crosscheck {name} passed. {detail}".rstrip())
        return CheckOutcome(name, True, detail)

    # ------------------------------------------------------------------ z hierarchy

    def check_zeta(self, nu: int, order: int) -> str:
        z0 = self.engine.hierarchy(nu, order, 0).z[0]
        for j in range(1, order + 1):
            _require_equal(
                "Higher Catalan coefficient",
                f"j={j}",
                c_nu(nu) ** j * zeta_j(nu, j),
                z0[j],
                ("closed form", "fixed point"),
            )
        return f"j <= {order}"

    def check_forcing_routes(self, nu: int, genus: int, order: int) -> str:
        state = self.engine.hierarchy(nu, order, genus)
        for g in range(1, genus + 1):
            check_forcing_routes(state, g)
        return f"g <= {genus}"

    def check_d_V_routes(self, nu: int, genus: int) -> str:
        count = 0
        for g in range(1, genus + 1):
            for V in partitions_of(2 * g + 1):
                _require_equal(
                    "d_V",
                    V.label(),
                    d_V_coefficient(nu, g, V),
                    d_V_from_walks(nu, V),
                    ("joint distribution", "walk sum"),
                )
                count += 1
        return f"{count} partition(s)"

    def check_forcing_families(self, nu: int, genus: int) -> str:
        """F_1 is asserted; the F_2[0] and F_3[0] families are reported."""
        notes = []
        for g in range(1, min(genus, 3) + 1):
            rows = compare_forcing_families(nu, g)
            off = [row.label for row in rows if not row.agrees]
            if g == 1 and off:
                row = next(r for r in rows if not r.agrees)
                _require_equal(
                    "F_1 monomial coefficient",
                    row.label,
                    format_rational(row.printed),
                    format_rational(row.computed),
                    ("printed", "d_V"),
                )
            notes.append(f"F_{g}: {len(rows) - len(off)}/{len(rows)} agree")
        return "; ".join(notes)

    def check_zg_reconstruction(self, nu: int, genus: int) -> str:
        notes = []
        for g in range(1, genus + 1):
            closed = self.engine.zg_closed_form(nu, g)
            if closed is None:
                raise ConsistencyFailure(
                    f"z_{g} for nu={nu} has no closed form within the ansatz bounds."
                )
            state = self.engine.hierarchy(nu, required_order(nu, g), g)
            _require_series(
                f"z_{g} closed form",
                state.z[g],
                closed.compose_series(state.z[0]),
                ("series solve", "closed form"),
            )
            if g == 1:
                _require_equal(
                    "z_1 closed form", "z_1", printed_z1(nu), closed, ("printed", "reconstructed")
                )
            notes.append(f"z_{g} round-trips")
        return ", ".join(notes)

    def report_printed_displays(self, nu: int, genus: int, order: int) -> str:
        """Published z_2, z_3 and ζ^{(1)} forms; mismatches are reported, never fatal."""
        notes = []
        printed = printed_z_forms(nu)
        for g, names in ((2, ("z2", "z2_shifted")), (3, ("z3",))):
            if g > genus:
                continue
            closed = self.engine.zg_closed_form(nu, g)
            if closed is None:
                continue
            for name in names:
                comparison = compare_printed_zg(name, nu, closed, printed[name])
                notes.append(
                    f"{name}: {'agrees' if comparison.agrees else f'{len(comparison.mismatches)} mismatch(es)'}"
                )
        if genus >= 1:
            z1 = self.engine.hierarchy(nu, order, 1).z[1]
            ratios = {
                format_rational(z1[j] / printed_zeta1(nu, j))
                for j in range(2, order + 1)
                if printed_zeta1(nu, j)
            }
            notes.append(f"zeta1 ratio(s) computed/printed: {', '.join(sorted(ratios)) or 'n/a'}")
        return "; ".join(notes)

    # ------------------------------------------------------------------ e_g

    def check_kappa0(self, nu: int, order: int) -> str:
        e0 = self.engine.eg_state(nu, order, 0)[0]
        for n in range(1, order + 1):
            closed = kappa0(nu, n)
            _require_equal(
                "kappa_0", f"n={n}", closed, e0[n] * factorial(n), ("closed form", "e_0 recursion")
            )
            _require_equal(
                "kappa_0",
                f"n={n}",
                closed,
                e0_taylor_coefficient(nu, n) * factorial(n),
                ("closed form", "zeta/L/U2 route"),
            )
        return f"n <= {order}"

    def check_e_hat_closed_forms(self, nu: int, genus: int, order: int) -> str:
        state = self.engine.eg_state(nu, order, genus)
        z0 = self.engine.hierarchy(nu, order, 0).z[0]
        forms = [printed_e0(nu).compose_series(z0)]
        if genus >= 1:
            forms.append(printed_e1(nu).compose_series(z0))
        if genus >= 2:
            forms.append(printed_e2(nu).compose_series(z0))
        for g, expected in enumerate(forms):
            _require_series(f"e_{g}", expected, state[g], ("closed form", "ODE recursion"))
        return f"e_0..e_{len(forms) - 1}"

    def check_kappa_integrality(self, nu: int, genus: int, order: int) -> str:
        state = self.engine.eg_state(nu, order, genus)
        for g in range(genus + 1):
            for n in range(1, order + 1):
                kappa(state, g, n)
        return f"g <= {genus}, n <= {order}"

    def check_lambda(self, nu: int, genus: int, order: int) -> str:
        for g in range(genus + 1):
            resonant = set(resonant_orders(nu, g))
            for n in range(order + 1):
                factored = lambda_n(nu, g, n)
                _require_equal(
                    "lambda_n", f"g={g}, n={n}", lambda_expanded(nu, g, n), factored,
                    ("expanded", "factored"),
                )
                _require_equal(
                    "resonance set", f"g={g}, n={n}", n in resonant, factored == 0,
                    ("resonant_orders", "lambda_n == 0"),
                )
        return f"g <= {genus}, n <= {order}"

    def check_solvability(self, nu: int, genus: int, order: int) -> str:
        state = self.engine.eg_state(nu, order, genus)
        hierarchy = self.engine.hierarchy(nu, order, genus)
        checked = 0
        for g in range(genus + 1):
            driving = drivers(hierarchy, state.e_hat, g)
            for n in resonant_orders(nu, g):
                if n > order:
                    continue
                _require_equal(
                    "resonant drivers", f"g={g}, n={n}", Fraction(0), driving[n],
                    ("solvability", "drivers"),
                )
                checked += 1
        return f"{checked} resonant order(s)"

    # ------------------------------------------------------------------ oracle

    def _affordable(self, task: OracleTask) -> bool:
        return matching_count(task) <= self.oracle_budget

    def check_oracle_kappa(self, nu: int, genus: int, order: int) -> str:
        state = self.engine.eg_state(nu, order, genus)
        n = 1
        while n <= order and self._affordable(OracleTask(nu, n)):
            result = self.engine.census(nu, n, force=True)
            for g in range(genus + 1):
                _require_equal(
                    "map count", f"g={g}, n={n}", result.count(g), kappa(state, g, n),
                    ("census", "n!·[s^n]e_g"),
                )
            n += 1
        return f"n <= {n - 1}"

    def check_two_leg(self, nu: int, genus: int, order: int) -> str:
        hierarchy = self.engine.hierarchy(nu, order, genus)
        n = 1
        while n <= order and self._affordable(OracleTask(nu, n, legs=2)):
            result = self.engine.census(nu, n, legs=2, force=True)
            for g in range(genus + 1):
                _require_equal(
                    "two-leg count", f"g={g}, n={n}", result.count(g),
                    hierarchy.z[g][n] * factorial(n), ("census", "n!·[s^n]z_g"),
                )
            n += 1
        return f"n <= {n - 1}"

    def check_oracle_invariance(self, nu: int) -> str:
        task = OracleTask(nu, 1)
        if not self._affordable(task):
            return f"skipped: {matching_count(task)} matchings above the crosscheck budget"
        baseline = MapOracle(threads=1).census(task)
        parallel = self.engine.census(nu, 1, force=True)
        _require_equal(
            "census", "threads", baseline.counts, parallel.counts, ("1 thread", "pool")
        )
        reversed_darts = list(range(task.darts - 1, -1, -1))
        conjugated = MapOracle(threads=1).census(task, permutation=reversed_darts)
        _require_equal(
            "census", "relabelling", baseline.counts, conjugated.counts,
            ("identity labels", "reversed labels"),
        )
        return f"nu={nu}, n=1"

    # ------------------------------------------------------------------ equilibrium

    def check_e0_assembly(self, nu: int) -> str:
        for z in E0_GRID:
            if not e0_assembly_check(nu, 1, z):
                raise ConsistencyFailure(
                    f"e_0 assembly differs from the closed form at nu={nu}, z={z}.",
                    index=f"z={z}",
                    provenance=("closed form", "assembly"),
                )
        return f"{len(E0_GRID)} grid point(s)"

    def check_equilibrium_routes(self, nu: int) -> str:
        for z in E0_GRID:
            _require_equal(
                "-l", f"z={z}", lagrange_multiplier(nu, 1, z),
                lagrange_multiplier_from_moments(nu, 1, z), ("closed form", "endpoint moment"),
            )
            if nu <= 3:
                _require_equal(
                    "(V, psi)", f"z={z}", potential_moment(nu, 1, z),
                    potential_moment_from_coefficients(nu, 1, z),
                    ("closed form", "Taylor coefficients"),
                )
        return f"{len(E0_GRID)} grid point(s)"

    def check_appendix(self, nu: int) -> str:
        for lam, beta_sq in APPENDIX_SAMPLES:
            if not appendix_S_check(nu, 6, lam, beta_sq):
                raise ConsistencyFailure(
                    f"Endpoint expansion closed form fails at lambda={lam}, beta^2={beta_sq}.",
                    provenance=("closed form", "recursion"),
                )
        return f"j <= 6 at {len(APPENDIX_SAMPLES)} point(s)"

    # ------------------------------------------------------------------ two-time

    def check_two_time(self, nu: int, order: int) -> str:
        nu2 = nu + 1
        joint = self.engine.two_time(nu, nu2, order)
        _require_series(
            "two-time slice s_2 = 0", z0_series(nu, order), joint.slice_s2_zero(),
            ("one-time z_0", "two-time z_0"),
        )
        _require_equal(
            "two-time swap", f"({nu}, {nu2})", joint, self.engine.two_time(nu2, nu, order).swapped(),
            ("(nu1, nu2)", "(nu2, nu1) swapped"),
        )
        for y0, z0 in TWO_TIME_POINTS:
            s1, s2 = two_time_parameters(nu, nu2, y0, z0)
            _require_equal(
                "two-time inversion", f"y0={y0}", Fraction(0), two_time_constraint(nu, nu2, s1, 0, y0),
                ("constraint", "residual"),
            )
            _require_equal(
                "two-time inversion", f"z0={z0}", Fraction(0), two_time_constraint(nu, nu2, s1, s2, z0),
                ("constraint", "residual"),
            )
        return f"(nu1, nu2) = ({nu}, {nu2})"
