from fractions import Fraction
from functools import cache

import pytest

from app.core.exceptions import (
    PreconditionViolation,
    ReconstructionFailure,
    TruncationError,
)
from app.series import Series, nu_factor
from app.toda import (
    HierarchyState,
    PartitionV,
    build_hierarchy,
    check_forcing_routes,
    constraint_residual,
    d_V_coefficient,
    d_V_from_walks,
    enumerate_walks,
    forcing_series,
    partitions_of,
    printed_monomial_coefficient,
    reconstruct_zg,
    required_order,
    two_time_constraint,
    two_time_parameters,
    two_time_z0,
    walk_sum_expansion,
    walk_sum_rhs,
    z0_series,
)
from app.equilibrium import zeta_j
from app.toda.printed import (
    compare_forcing_families,
    compare_printed_zg,
    printed_z1,
    printed_z2,
    printed_z2_shifted,
    printed_z3,
)
from app.utils.rational_utils import c_nu


def test_walks():
    walks = enumerate_walks(2)
    assert len(walks) == 4
    assert walks[0].ell == (0, -1, -2)
    assert walks[-1].ell == (1, 0, -1)
    assert len(enumerate_walks(4)) == 56


def test_partitions():
    labels = [V.label() for V in partitions_of(5)]
    assert labels[0] == "{5}"
    assert labels[-1] == "{1,1,1,1,1}"
    assert len(labels) == 7
    V = PartitionV((1, 2, 1))
    assert V.parts == (2, 1, 1)
    assert V.symmetry == 2
    assert len(V.arrangements()) == 3
    with pytest.raises(PreconditionViolation):
        PartitionV((0, 1))


def test_z0():
    assert list(z0_series(2, 3).coefficients) == [1, 12, 288, 8640]
    assert constraint_residual(3, z0_series(3, 6)).is_zero()
    with pytest.raises(PreconditionViolation):
        z0_series(1, 3)


def test_z1(hierarchy_nu2):
    assert hierarchy_nu2.z[1].truncate(3) == Series([0, 0, 96, 10368], 3)


@pytest.mark.parametrize(
    "nu, parts, expected",
    [
        (2, (3,), 24),
        (2, (1, 1, 1), 0),
        (2, (2, 1), 16),
        (2, (7,), 264),
        (2, (6, 1), 136),
        (3, (1, 1, 1), 30),
    ],
)
def test_d_V_values(nu, parts, expected):
    V = PartitionV(parts)
    assert d_V_coefficient(nu, (V.size - 1) // 2, V) == expected


@pytest.mark.parametrize("nu", [2, 3, 4])
def test_d_V_routes(nu):
    for g in range(4):
        for V in partitions_of(2 * g + 1):
            assert d_V_coefficient(nu, g, V) == d_V_from_walks(nu, V), V.label()


def test_d_V_rejects_wrong_size():
    with pytest.raises(PreconditionViolation):
        d_V_coefficient(2, 1, PartitionV((2, 2)))


def test_leading_coupling():
    # the g = 0 partition {1} carries c_ν
    assert d_V_coefficient(2, 0, PartitionV((1,))) == 12
    assert d_V_coefficient(3, 0, PartitionV((1,))) == 60


@pytest.mark.parametrize("nu, genus", [(2, 3), (3, 3), (4, 2)])
def test_forcing_routes_agree(nu, genus):
    state = build_hierarchy(nu, 10, genus, check_routes=True)
    assert state.genus == genus
    assert check_forcing_routes(state, genus) == forcing_series(state, genus)


def test_walk_sum_is_odd_in_inverse_k(hierarchy_nu2):
    expansion = walk_sum_expansion(hierarchy_nu2)
    assert len(expansion) == 6
    for p in (0, 2, 4):
        assert expansion[p].is_zero()


def test_forcing_needs_positive_genus(hierarchy_nu2):
    with pytest.raises(PreconditionViolation):
        forcing_series(hierarchy_nu2, 0)


def test_printed_forcing_monomial():
    assert printed_monomial_coefficient(2, PartitionV((3,))) == Fraction(1, 3)
    assert all(row.agrees for row in compare_forcing_families(2, 1))


@pytest.mark.parametrize("nu", [2, 3, 4, 5])
def test_z1_closed_form(nu):
    state = build_hierarchy(nu, required_order(nu, 1), 1)
    z1 = reconstruct_zg(state, 1)
    assert z1 == printed_z1(nu)
    assert z1.pole_order(nu_factor(nu)) == 4


@cache
def _genus_three_state(nu: int) -> HierarchyState:
    return build_hierarchy(nu, required_order(nu, 3), 3)


@pytest.mark.parametrize("nu", [2, 3, 4])
@pytest.mark.parametrize("genus", [1, 2, 3])
def test_zg_closed_form_round_trip(nu, genus):
    state = _genus_three_state(nu)
    z_g = reconstruct_zg(state, genus)
    assert z_g.compose_series(state.z[0]) == state.z[genus]
    assert z_g.is_divisible_by([0, -1, 1])
    assert z_g.pole_order(nu_factor(nu)) <= 5 * genus - 1


@pytest.mark.parametrize("nu", [2, 3, 4])
def test_printed_z2_displays(nu, caplog):
    z2 = reconstruct_zg(_genus_three_state(nu), 2)
    assert compare_printed_zg("z2_shifted", nu, z2, printed_z2_shifted(nu)).agrees
    direct = compare_printed_zg("z2", nu, z2, printed_z2(nu))
    assert not direct.agrees
    assert len(direct.mismatches) == 2
    assert "probable misprint" in caplog.text


@pytest.mark.parametrize("nu", [3, 4])
def test_printed_z3_display(nu, caplog):
    z3 = reconstruct_zg(_genus_three_state(nu), 3)
    result = compare_printed_zg("z3", nu, z3, printed_z3(nu))
    assert len(result.mismatches) == 4
    assert "probable misprint" in caplog.text


@pytest.mark.parametrize("nu, genus", [(2, 0), (2, 1), (3, 0), (3, 1)])
def test_walk_sum_rhs_is_derivative(nu, genus):
    state = build_hierarchy(nu, 8, 1)
    rhs = walk_sum_rhs(state, genus)
    assert rhs.truncate(state.order - 1) == state.z[genus].derivative()


def test_walk_sum_rhs_needs_genus(hierarchy_nu2):
    with pytest.raises(TruncationError):
        walk_sum_rhs(hierarchy_nu2, 3)

def test_reconstruction_needs_order(hierarchy_nu2):
    with pytest.raises(ReconstructionFailure):
        reconstruct_zg(hierarchy_nu2, 2)


def test_two_time_coefficients():
    z = two_time_z0(2, 3, 4)
    assert z.coefficient(1, 1) == 3600
    assert z.slice_s2_zero() == z0_series(2, 4)
    assert z.swapped() == two_time_z0(3, 2, 4)


def test_two_time_inversion():
    y0, z0 = Fraction(1, 2), Fraction(1, 3)
    s1, s2 = two_time_parameters(2, 3, y0, z0)
    assert s1 == Fraction(-1, 6)
    assert two_time_constraint(2, 3, s1, s2, z0) == 0
    with pytest.raises(PreconditionViolation):
        two_time_parameters(2, 3, 0, z0)


def test_higher_catalan_coefficients():
    for nu in (2, 3):
        z0 = z0_series(nu, 20)
        for j in range(1, 21):
            assert z0[j] == c_nu(nu) ** j * zeta_j(nu, j)

