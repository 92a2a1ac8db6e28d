from app.series.bivariate import BivariateSeries
from app.series.graded import GradedExpansion, graded_exp, graded_log
from app.series.monomial import MonomialSeries, w_derivative_at_one
from app.series.rational_function import (
    Z0,
    LogExtendedFunction,
    RationalFunction,
    nu_factor,
)
from app.series.series import (
    Series,
    evaluate_polynomial,
    series_arith,
    series_compose,
    series_derivative,
    series_exp,
    series_log,
    series_power,
)

__all__ = [
    "BivariateSeries",
    "GradedExpansion",
    "LogExtendedFunction",
    "MonomialSeries",
    "RationalFunction",
    "Series",
    "Z0",
    "evaluate_polynomial",
    "graded_exp",
    "graded_log",
    "nu_factor",
    "series_arith",
    "series_compose",
    "series_derivative",
    "series_exp",
    "series_log",
    "series_power",
    "w_derivative_at_one",
]
