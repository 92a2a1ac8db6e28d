from fractions import Fraction

import pytest

from app.core.exceptions import ConsistencyFailure
from app.services.engine_service import EngineService, integer_count
from app.toda.printed import printed_z1


def test_kappa_tables(engine):
    assert [e.value for e in engine.kappa_table(2, 0, 3)] == [2, 36, 1728]
    genus_one = engine.kappa_table(2, 1, 3)
    assert [(e.value, e.source) for e in genus_one] == [
        (1, "table"),
        (60, "recursion"),
        (6336, "recursion"),
    ]
    genus_two = engine.kappa_table(2, 2, 3)
    assert [(e.value, e.source) for e in genus_two] == [
        (0, "recursion"),
        (0, "table"),
        (1440, "table"),
    ]


def test_kappa_table_other_valence(engine):
    assert [(e.value, e.source) for e in engine.kappa_table(4, 2, 1)] == [(21, "table")]


def test_user_override_is_reported():
    engine = EngineService(threads=1, overrides={(1, 2, 1): 1})
    assert engine.kappa_table(2, 1, 1)[0].source == "user"


def test_memoised_states_truncate(engine):
    small = engine.hierarchy(2, 4, 1)
    engine.hierarchy(2, 10, 2)
    again = engine.hierarchy(2, 4, 1)
    assert small == again
    assert (again.order, again.genus) == (4, 1)
    assert engine.eg_state(2, 3, 1)[1].order == 3


def test_two_leg_counts(engine):
    assert engine.two_leg_counts(2, 0, 3) == [12, 576, 51840]
    assert engine.two_leg_counts(2, 1, 2) == [0, 192]


def test_closed_forms(engine):
    assert engine.zg_closed_form(2, 1) == printed_z1(2)
    e1 = engine.eg_closed_form(3, 1)
    assert e1.c_log_nu_term == Fraction(-1, 12)
    assert e1.d_log_z0_term == 0


def test_census_and_two_time(engine):
    assert engine.census(2, 1).counts == {0: 2, 1: 1}
    assert engine.two_time(2, 3, 2).coefficient(1, 1) == 3600


def test_integer_count_accepts_whole_values():
    assert integer_count(Fraction(192), "count") == 192
    assert integer_count(Fraction(0), "count") == 0


@pytest.mark.parametrize("value", [Fraction(1, 2), Fraction(-3)])
def test_integer_count_rejects_fractional_or_negative(value):
    with pytest.raises(ConsistencyFailure) as info:
        integer_count(value, "two-leg count nu=2, g=1, n=2")
    assert info.value.exit_code == 2
    assert "two-leg count nu=2, g=1, n=2" in info.value.message
