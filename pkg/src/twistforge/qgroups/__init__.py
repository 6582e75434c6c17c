"""Quantum groups U_q(g) with PBW bases, their classical limits and the specialization q -> 1."""

from .classical import ClassicalAlgebra, classical_algebra, classical_sl3_weights
from .integral import (
    IntegralWitness,
    NotRegular,
    SpecializationMap,
    default_map,
    integral_membership,
    specialize_element,
)
from .roots import (
    AmbiguousDecomposition,
    NormalOrdering,
    RootSystem,
    UnsupportedType,
    build_root_system,
    is_normal,
    standard_normal_ordering,
)
from .uq import (
    QCommutationReport,
    UqAlgebra,
    composite_generator,
    ls_violations,
    q_commutation_check,
    quantum_group,
    uq_prime_sl3,
)

__all__ = [
    "AmbiguousDecomposition",
    "ClassicalAlgebra",
    "IntegralWitness",
    "NormalOrdering",
    "NotRegular",
    "QCommutationReport",
    "RootSystem",
    "SpecializationMap",
    "UnsupportedType",
    "UqAlgebra",
    "build_root_system",
    "classical_algebra",
    "classical_sl3_weights",
    "composite_generator",
    "default_map",
    "integral_membership",
    "is_normal",
    "ls_violations",
    "standard_normal_ordering",
    "q_commutation_check",
    "quantum_group",
    "specialize_element",
    "uq_prime_sl3",
]
