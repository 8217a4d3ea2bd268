from .arithmetic import TRIVIAL, OrderMarker, PrimeSet, is_p_power, is_prime_power, prime_divisors
from .base import FiniteGroup, check_group_axioms
from .group_file import load_group_file, parse_group_text
from .permutation import Permutation, compose, inverse, parse_permutation
from .permutation_group import PermutationGroup, generate_group
from .subgroups import (
    Subgroup,
    center,
    centralizer,
    conjugacy_orbits,
    element_order,
    is_abelian,
    is_normal,
    normal_closure,
    normal_subgroups,
    normality_witness,
    power,
    quotient_group,
    require_normal,
    subgroup_as_group,
    subgroup_generated,
    subgroup_generators,
    trivial_subgroup,
    whole_group,
)
from .table_group import TableGroup

__all__ = [
    "TRIVIAL",
    "FiniteGroup",
    "OrderMarker",
    "Permutation",
    "PermutationGroup",
    "PrimeSet",
    "Subgroup",
    "TableGroup",
    "center",
    "centralizer",
    "check_group_axioms",
    "compose",
    "conjugacy_orbits",
    "element_order",
    "generate_group",
    "inverse",
    "is_abelian",
    "is_normal",
    "is_p_power",
    "is_prime_power",
    "load_group_file",
    "normal_closure",
    "normal_subgroups",
    "normality_witness",
    "parse_group_text",
    "parse_permutation",
    "power",
    "prime_divisors",
    "quotient_group",
    "require_normal",
    "subgroup_as_group",
    "subgroup_generated",
    "subgroup_generators",
    "trivial_subgroup",
    "whole_group",
]
