from fractions import Fraction

import pytest

from app.core.exceptions import (
    ConsistencyFailure,
    PreconditionViolation,
    TruncationError,
    UnresolvedConstantError,
)
from app.eg import (
    RESONANCE_TABLE,
    EgState,
    Resonance,
    ResonanceResolver,
    ResonantValue,
    build_eg,
    eg_required_order,
    kappa,
    lambda_expanded,
    lambda_n,
    printed_e0,
    printed_e1,
    printed_e2,
    reconstruct_eg,
    resonant_orders,
    solve_eg,
)
from app.series import LogExtendedFunction, Series
from app.toda import build_hierarchy


@pytest.fixture(scope="module")
def eg_nu2(hierarchy_nu2) -> EgState:
    return build_eg(hierarchy_nu2)


def test_e0_counts(eg_nu2):
    assert [kappa(eg_nu2, 0, n) for n in range(1, 5)] == [2, 36, 1728, 145152]


def test_e1_series(eg_nu2):
    assert eg_nu2[1].truncate(3) == Series([0, 1, 30, 1056], 3)
    assert [kappa(eg_nu2, 1, n) for n in range(1, 4)] == [1, 60, 6336]


def test_e2_low_orders(eg_nu2):
    e2 = eg_nu2[2]
    assert (e2[1], e2[2], e2[3]) == (0, 0, 240)
    assert kappa(eg_nu2, 2, 3) == 1440


def test_resonance_sources_are_recorded(eg_nu2):
    resonance = eg_nu2.resonances[2]
    assert resonance.resonant_orders == (2, 3)
    assert [(v.n, v.source) for v in resonance.sources] == [(2, "table"), (3, "table")]


@pytest.mark.parametrize("nu", [2, 3, 4, 5])
def test_e1_closed_form(nu):
    hierarchy = build_hierarchy(nu, 12, 1)
    state = build_eg(hierarchy)
    assert printed_e1(nu).compose_series(hierarchy.z[0]) == state[1]


@pytest.mark.parametrize("nu", [2, 3, 4])
def test_e2_closed_form(nu):
    hierarchy = build_hierarchy(nu, 8, 2)
    state = build_eg(hierarchy)
    assert printed_e2(nu).compose_series(hierarchy.z[0]) == state[2]


def test_e1_first_coefficient_for_hexavalent_maps():
    state = build_eg(build_hierarchy(3, 3, 1))
    assert state[1][1] == 10


def test_kappa_from_tabulated_resonances():
    assert kappa(build_eg(build_hierarchy(4, 2, 2)), 2, 1) == 21
    assert kappa(build_eg(build_hierarchy(2, 4, 3)), 3, 4) == 0


def test_lambda_factorization():
    for g in range(6):
        for nu in range(2, 9):
            for n in range(21):
                assert lambda_n(nu, g, n) == lambda_expanded(nu, g, n)


@pytest.mark.parametrize(
    "nu, g, expected",
    [(2, 0, ()), (2, 1, (0, 1)), (3, 1, (0,)), (2, 2, (2, 3)), (3, 2, (1,)), (5, 2, ())],
)
def test_resonant_orders(nu, g, expected):
    assert resonant_orders(nu, g) == expected


def test_table_keys_are_resonant():
    for (g, nu, n) in RESONANCE_TABLE:
        assert n in resonant_orders(nu, g)
        assert lambda_n(nu, g, n) == 0


def test_resolver_precedence():
    resolver = ResonanceResolver(overrides={(2, 2, 3): 5})
    assert resolver.resolve_order(2, 2, 3) == ResonantValue(3, 5, "user")
    assert resolver.resolve_order(2, 2, 2) == ResonantValue(2, 0, "table")
    assert resolver.resolve_order(2, 1, 0) == ResonantValue(0, 0, "normalization")


def test_resolver_rejects_fractional_override():
    resolver = ResonanceResolver(overrides={(2, 2, 3): "1/2"})
    with pytest.raises(PreconditionViolation):
        resolver.resolve_order(2, 2, 3)


def test_resolver_falls_back_to_census():
    resolved = ResonanceResolver(budget=10**6).resolve_order(7, 4, 1)
    assert resolved == ResonantValue(1, 0, "oracle")


def test_unresolved_constant():
    with pytest.raises(UnresolvedConstantError) as info:
        ResonanceResolver(budget=10).resolve_order(7, 4, 1)
    assert (info.value.genus, info.value.nu, info.value.order) == (4, 7, 1)


def test_resolve_filters_by_order():
    resonance = ResonanceResolver().resolve(2, 2, order=2)
    assert resonance.resonant_orders == (2, 3)
    assert resonance.value_at(3) is None
    assert resonance.value_at(2).coefficient == 0


def _genus_one_resonance(*values: ResonantValue) -> Resonance:
    return Resonance(1, 2, (0, 1), values)


def test_solve_eg_uses_resonant_constants():
    resonance = _genus_one_resonance(
        ResonantValue(0, 0, "normalization"), ResonantValue(1, 1, "table")
    )
    solved = solve_eg(2, 1, Series([0, 0, 6], 2), resonance)
    assert solved == Series([0, 1, 3], 2)


def test_solve_eg_rejects_nonzero_drivers_at_resonance():
    resonance = _genus_one_resonance(
        ResonantValue(0, 0, "normalization"), ResonantValue(1, 1, "table")
    )
    with pytest.raises(ConsistencyFailure):
        solve_eg(2, 1, Series([0, 5], 1), resonance)

def test_solve_eg_names_missing_resonant_constant():
    with pytest.raises(UnresolvedConstantError) as info:
        solve_eg(2, 1, Series([0, 0], 1), _genus_one_resonance())
    assert (info.value.genus, info.value.nu, info.value.order) == (1, 2, 0)
    assert info.value.exit_code == 2


def test_kappa_integrality_guard():
    state = EgState(2, 1, 0, (Series([0, -1], 1),))
    with pytest.raises(ConsistencyFailure):
        kappa(state, 0, 1)
    with pytest.raises(TruncationError):
        kappa(state, 0, 2)
    with pytest.raises(TruncationError):
        state[1]


def test_sign_flip():
    state = EgState(2, 2, 0, (Series([0, 1, 2], 2),))
    assert state.e_of_t(0) == Series([0, -1, 2], 2)


def test_reconstruct_e0_and_e1():
    state = build_eg(build_hierarchy(3, eg_required_order(3, 1), 1))
    assert reconstruct_eg(state, 0) == printed_e0(3)
    e1 = reconstruct_eg(state, 1)
    assert e1 == printed_e1(3)
    assert e1.c_log_nu_term == Fraction(-1, 12)


def test_reconstruct_e2():
    state = build_eg(build_hierarchy(2, eg_required_order(2, 2), 2))
    assert reconstruct_eg(state, 2) == LogExtendedFunction(2, printed_e2(2))


def test_kappa0_three_way_for_hexavalent_maps():
    state = build_eg(build_hierarchy(3, 4, 0))
    assert [kappa(state, 0, n) for n in range(1, 5)] == [5, 600, 216000, 142560000]


@pytest.mark.parametrize("nu", [2, 3, 4, 5, 6])
def test_kappa_integrality(nu):
    state = build_eg(build_hierarchy(nu, 8, 3))
    for g in range(4):
        for n in range(1, 9):
            assert kappa(state, g, n) >= 0
