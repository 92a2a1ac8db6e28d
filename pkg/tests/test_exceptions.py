from app.core.exceptions import (
    ConsistencyFailure,
    EngineError,
    GenusRejection,
    InvalidParameters,
    OracleBudgetExceeded,
    PreconditionViolation,
    ReconstructionFailure,
    TruncationError,
    UnresolvedConstantError,
)


def test_exit_codes():
    assert InvalidParameters().exit_code == 3
    assert OracleBudgetExceeded().exit_code == 4
    for error in (
        PreconditionViolation(),
        TruncationError(),
        ConsistencyFailure(),
        UnresolvedConstantError(),
        ReconstructionFailure(),
        GenusRejection(),
    ):
        assert isinstance(error, EngineError)
        assert error.exit_code == 2


def test_message_formatting():
    assert str(EngineError("quiet", 0)) == "quiet"
    assert str(InvalidParameters("bad nu")) == "bad nu Exit Code: 3."


def test_consistency_failure_names_both_routes():
    error = ConsistencyFailure(
        "routes disagree", index=3, expected=1, actual=2, provenance=("recursion", "oracle")
    )
    assert "First difference at 3: recursion=1, oracle=2." in str(error)


def test_budget_details():
    error = OracleBudgetExceeded(estimate=10395, budget=100)
    assert (error.estimate, error.budget) == (10395, 100)
