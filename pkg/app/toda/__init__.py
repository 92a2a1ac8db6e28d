from app.toda.forcing import (
    check_forcing_routes,
    d_V_coefficient,
    d_V_from_walks,
    forcing_series,
    printed_monomial_coefficient,
    walk_sum_expansion,
    walk_sum_rhs,
)
from app.toda.hierarchy import (
    HierarchyState,
    build_hierarchy,
    constraint_residual,
    solve_zg,
    z0_series,
)
from app.toda.reconstruct import reconstruct_zg, required_order
from app.toda.two_time import two_time_constraint, two_time_parameters, two_time_z0
from app.toda.walks import PartitionV, Walk, enumerate_walks, partitions_of

__all__ = [
    "HierarchyState",
    "PartitionV",
    "Walk",
    "build_hierarchy",
    "check_forcing_routes",
    "constraint_residual",
    "d_V_coefficient",
    "d_V_from_walks",
    "enumerate_walks",
    "forcing_series",
    "partitions_of",
    "printed_monomial_coefficient",
    "reconstruct_zg",
    "required_order",
    "solve_zg",
    "two_time_constraint",
    "two_time_parameters",
    "two_time_z0",
    "walk_sum_expansion",
    "walk_sum_rhs",
    "z0_series",
]
