"""Exact arithmetic for the A_n Coxeter system."""

from core.typea.permutations import (
    DescentData,
    GeneratorSet,
    Permutation,
    Word,
    all_permutations,
    canonical_reduced_word,
    check_generator,
    check_rank,
    compose,
    descent_data,
    format_word,
    from_word,
    generator_set,
    identity,
    inverse,
    is_bigrassmannian,
    left_descents,
    length,
    longest_element,
    product,
    right_descents,
    same_rank,
    simple_reflection,
    support,
)
from core.typea.roots import (
    PositiveRoot,
    RootData,
    RootSet,
    SignedRoot,
    act,
    highest_root,
    inversion_set,
    inversion_set_of_word,
    is_inversion_set,
    parabolic_positive_roots,
    permutation_from_inversion_set,
    positive_roots,
    reflection_of_root,
    root_data,
    simple_root,
    simple_roots,
)
from core.typea.weak_order import (
    join,
    leq_weak_right,
    lower_interval,
    meet,
    transitive_closure,
    weak_order_graph,
)

__all__ = [
    "DescentData",
    "GeneratorSet",
    "Permutation",
    "Word",
    "all_permutations",
    "canonical_reduced_word",
    "check_generator",
    "check_rank",
    "compose",
    "descent_data",
    "format_word",
    "from_word",
    "generator_set",
    "identity",
    "inverse",
    "is_bigrassmannian",
    "left_descents",
    "length",
    "longest_element",
    "product",
    "right_descents",
    "same_rank",
    "simple_reflection",
    "support",
    "PositiveRoot",
    "RootData",
    "RootSet",
    "SignedRoot",
    "act",
    "highest_root",
    "inversion_set",
    "inversion_set_of_word",
    "is_inversion_set",
    "parabolic_positive_roots",
    "permutation_from_inversion_set",
    "positive_roots",
    "reflection_of_root",
    "root_data",
    "simple_root",
    "simple_roots",
    "join",
    "leq_weak_right",
    "lower_interval",
    "meet",
    "transitive_closure",
    "weak_order_graph",
]
