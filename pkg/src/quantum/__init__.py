"""
Точная линейная алгебра двух- и четырёхмерных пространств: состояния, локальные унитарные
преобразования, частичный след и разложение Шмидта.
"""

from .density import (
    DensityOperator,
    Subsystem,
    coherence,
    entanglement_entropy,
    is_superposition,
    partial_trace,
    purity,
    reduced_states,
)
from .schmidt import SchmidtDecomposition, is_entangled, is_mixed_reduction, schmidt
from .states import (
    BipartiteState,
    PureState,
    apply_local_unitaries,
    composite_relabelling,
    make_measurement_state,
    make_superposition,
    tensor_product,
)
from .validation import StateValidationError, UnitaryValidationError, ValidationError

__all__ = [
    "BipartiteState",
    "DensityOperator",
    "PureState",
    "SchmidtDecomposition",
    "StateValidationError",
    "Subsystem",
    "UnitaryValidationError",
    "ValidationError",
    "apply_local_unitaries",
    "coherence",
    "composite_relabelling",
    "entanglement_entropy",
    "is_entangled",
    "is_mixed_reduction",
    "is_superposition",
    "make_measurement_state",
    "make_superposition",
    "partial_trace",
    "purity",
    "reduced_states",
    "schmidt",
    "tensor_product",
]
