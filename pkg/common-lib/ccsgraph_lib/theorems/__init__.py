from .checks import (
    CrossPrimeScenario,
    PairContext,
    analyze_pair,
    check_element_power_lemma,
    check_lemma_key,
    check_main_theorem,
    check_main_theorem_decomposition,
    check_theorem_two_primes,
    check_two_component_characterization,
    group_graph,
    theorem_b_warnings,
)
from .frobenius import (
    FrobeniusData,
    QuasiFrobeniusData,
    is_frobenius,
    is_quasi_frobenius_abelian,
    quasi_frobenius_data,
)
from .suite import (
    GroupPair,
    assemble_report,
    consistency_failures,
    describe_normal,
    evaluate_pair_record,
    normal_pairs,
    run_suite,
    search_hit,
    search_pairs,
    summarize_graph,
)

__all__ = [
    "CrossPrimeScenario",
    "FrobeniusData",
    "GroupPair",
    "PairContext",
    "QuasiFrobeniusData",
    "analyze_pair",
    "assemble_report",
    "check_element_power_lemma",
    "check_lemma_key",
    "check_main_theorem",
    "check_main_theorem_decomposition",
    "check_theorem_two_primes",
    "check_two_component_characterization",
    "consistency_failures",
    "describe_normal",
    "evaluate_pair_record",
    "group_graph",
    "is_frobenius",
    "is_quasi_frobenius_abelian",
    "normal_pairs",
    "quasi_frobenius_data",
    "run_suite",
    "search_hit",
    "search_pairs",
    "summarize_graph",
    "theorem_b_warnings",
]
