from app.equilibrium.appendix import appendix_S_check
from app.equilibrium.e0 import (
    E0Form,
    e0_assembly,
    e0_assembly_check,
    e0_closed_form,
    e0_closed_form_value,
    e0_taylor_coefficient,
    kappa0,
    log_coeff_L,
    quad_coeff_U2,
    zeta_j,
)
from app.equilibrium.measure import (
    EquilibriumParams,
    LogLinear,
    gaussian_energy,
    h_coeff,
    lagrange_multiplier,
    lagrange_multiplier_from_moments,
    mass_constraint,
    potential_moment,
    potential_moment_from_coefficients,
    v_coeff,
)

__all__ = [
    "E0Form",
    "EquilibriumParams",
    "LogLinear",
    "appendix_S_check",
    "e0_assembly",
    "e0_assembly_check",
    "e0_closed_form",
    "e0_closed_form_value",
    "e0_taylor_coefficient",
    "gaussian_energy",
    "h_coeff",
    "kappa0",
    "lagrange_multiplier",
    "lagrange_multiplier_from_moments",
    "log_coeff_L",
    "mass_constraint",
    "potential_moment",
    "potential_moment_from_coefficients",
    "quad_coeff_U2",
    "v_coeff",
    "zeta_j",
]
