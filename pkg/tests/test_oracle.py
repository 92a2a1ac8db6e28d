import numpy as np
import pytest

from app.core.exceptions import (
    GenusRejection,
    InvalidParameters,
    OracleBudgetExceeded,
    PreconditionViolation,
)
from app.oracle import (
    MapOracle,
    OracleTask,
    census,
    double_factorial,
    euler_genus,
    matching_count,
    two_leg_census,
)


def test_double_factorial():
    assert [double_factorial(m) for m in (-1, 0, 7, 11, 13, 15)] == [
        1, 1, 105, 10395, 135135, 2027025,
    ]
    assert matching_count(OracleTask(2, 4)) == 2027025


def test_single_quartic_vertex():
    result = census(OracleTask(2, 1))
    assert result.counts == {0: 2, 1: 1}
    assert result.total == 3


def test_two_quartic_vertices():
    result = census(OracleTask(2, 2))
    assert result.count(0) == 36
    assert result.connected == 96
    assert result.disconnected_count == 9
    assert result.total == 105


@pytest.mark.parametrize("nu", [2, 3])
def test_disconnected_pairs_are_two_single_vertex_maps(nu):
    single = census(OracleTask(nu, 1))
    pair = census(OracleTask(nu, 2))
    assert single.disconnected_count == 0
    assert pair.disconnected_count == single.total**2
    assert pair.total == single.total**2 + pair.connected


@pytest.mark.parametrize(
    "nu, vertices, genus, expected",
    [
        (2, 1, 1, 1),
        (2, 2, 2, 0),
        (2, 3, 2, 1440),
        (3, 1, 2, 0),
        (4, 1, 2, 21),
        (3, 2, 3, 0),
        (5, 1, 3, 0),
        (6, 1, 3, 1485),
        (2, 4, 3, 0),
        (2, 3, 0, 1728),
    ],
)
def test_census_counts(nu, vertices, genus, expected):
    assert census(OracleTask(nu, vertices)).count(genus) == expected


def test_two_legged_maps():
    assert two_leg_census(2, 1).count(0) == 12
    assert two_leg_census(2, 1).count(1) == 0
    assert two_leg_census(2, 2).count(1) == 192


def test_thread_count_does_not_change_counts():
    task = OracleTask(2, 3)
    assert census(task, thread_budget=1).counts == census(task, thread_budget=4).counts


def test_relabelling_invariance():
    task = OracleTask(2, 3)
    permutation = np.random.default_rng(0).permutation(task.darts).tolist()
    assert census(task, permutation=permutation).counts == census(task).counts
    with pytest.raises(InvalidParameters):
        census(task, permutation=[0] * task.darts)


def test_budget_refusal():
    oracle = MapOracle(matching_budget=100)
    with pytest.raises(OracleBudgetExceeded) as info:
        oracle.census(OracleTask(2, 3))
    assert info.value.estimate == 10395
    assert info.value.exit_code == 4
    assert oracle.census(OracleTask(2, 3), force=True).count(2) == 1440


def test_task_validation():
    with pytest.raises(InvalidParameters):
        OracleTask(1, 1)
    with pytest.raises(InvalidParameters):
        OracleTask(2, 0)
    with pytest.raises(InvalidParameters):
        OracleTask(2, 1, legs=1)


def test_euler_genus():
    assert euler_genus(1, 2, 3) == 0
    assert euler_genus(1, 2, 1) == 1
    assert euler_genus(3, 6, 1) == 2
    with pytest.raises(GenusRejection):
        euler_genus(1, 2, 2)
    with pytest.raises(GenusRejection):
        euler_genus(1, 0, 2)
    with pytest.raises(PreconditionViolation):
        euler_genus(1, 2, 0)


@pytest.mark.extended
def test_genus_three_quartic_count():
    assert census(OracleTask(2, 5), force=True).count(3) == 58060800


@pytest.mark.parametrize(
    "genus, nu, vertices, expected",
    [(1, 2, 1, 1), (2, 2, 2, 0), (2, 3, 1, 0), (3, 3, 2, 0), (3, 5, 1, 0)],
)
def test_tabulated_resonant_counts(genus, nu, vertices, expected):
    assert census(OracleTask(nu, vertices)).count(genus) == expected


def test_hexavalent_planar_counts():
    assert census(OracleTask(3, 1)).count(0) == 5
    assert census(OracleTask(3, 2)).count(0) == 600
