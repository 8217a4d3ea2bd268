from .class_data import (
    ClassData,
    ConjClass,
    commuting_cross_prime_pair,
    cross_prime_pairs,
    g_classes,
    group_classes,
    noncentral_elements,
    p_elements,
    realized_sizes,
)

__all__ = [
    "ClassData",
    "ConjClass",
    "commuting_cross_prime_pair",
    "cross_prime_pairs",
    "g_classes",
    "group_classes",
    "noncentral_elements",
    "p_elements",
    "realized_sizes",
]
