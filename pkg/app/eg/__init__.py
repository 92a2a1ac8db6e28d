from app.eg.hierarchy import EgState, build_eg, drivers, kappa, solve_eg
from app.eg.reconstruct import (
    eg_required_order,
    printed_e0,
    printed_e1,
    printed_e2,
    reconstruct_eg,
)
from app.eg.resonance import (
    RESONANCE_TABLE,
    Resonance,
    ResonanceResolver,
    ResonantValue,
    lambda_expanded,
    lambda_n,
    resonant_orders,
)

__all__ = [
    "RESONANCE_TABLE",
    "EgState",
    "Resonance",
    "ResonanceResolver",
    "ResonantValue",
    "build_eg",
    "drivers",
    "eg_required_order",
    "kappa",
    "lambda_expanded",
    "lambda_n",
    "printed_e0",
    "printed_e1",
    "printed_e2",
    "reconstruct_eg",
    "resonant_orders",
    "solve_eg",
]
