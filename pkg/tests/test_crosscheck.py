from app.core.exceptions import ConsistencyFailure
from app.processors.crosscheck_processor import CrosscheckProcessor


def test_battery_passes_for_quartic_maps(engine):
    report = CrosscheckProcessor(engine).run(2, 2, 8)
    assert report.first_failure is None, report.first_failure
    assert report.passed
    names = [outcome.name for outcome in report.outcomes]
    assert len(names) == len(set(names)) == 18


def test_failures_are_recorded_not_raised(engine):
    processor = CrosscheckProcessor(engine)

    def broken() -> str:
        raise ConsistencyFailure("routes disagree", index=1, expected=1, actual=2)

    outcome = processor._run_check("broken", broken)
    assert not outcome.passed
    assert isinstance(outcome.error, ConsistencyFailure)
    assert "First difference at 1" in outcome.detail


def test_oracle_checks_respect_budget(engine):
    processor = CrosscheckProcessor(engine, oracle_budget=1)
    assert processor.check_oracle_invariance(2).startswith("skipped")
    assert processor.check_oracle_kappa(2, 1, 3) == "n <= 0"
