from app.oracle.census import (
    MapCensus,
    MapOracle,
    OracleTask,
    census,
    double_factorial,
    euler_genus,
    matching_count,
    two_leg_census,
)

__all__ = [
    "MapCensus",
    "MapOracle",
    "OracleTask",
    "census",
    "double_factorial",
    "euler_genus",
    "matching_count",
    "two_leg_census",
]
