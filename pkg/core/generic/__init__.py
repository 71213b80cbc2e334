"""Numeric engine for arbitrary Coxeter matrices."""

from core.generic.engine import (
    EPSILON,
    CoxeterMatrix,
    GenericElement,
    GenericRoot,
    GenericSystem,
    bounded_square_search,
    build_system,
    cocycle_identity_holds,
    evaluate_word,
    generate_roots,
    inversion_set_generic,
    length_additivity_matches,
    reflection_cocycle,
    transfer_check_generic,
)

__all__ = [
    "EPSILON",
    "CoxeterMatrix",
    "GenericElement",
    "GenericRoot",
    "GenericSystem",
    "bounded_square_search",
    "build_system",
    "cocycle_identity_holds",
    "evaluate_word",
    "generate_roots",
    "inversion_set_generic",
    "length_additivity_matches",
    "reflection_cocycle",
    "transfer_check_generic",
]
