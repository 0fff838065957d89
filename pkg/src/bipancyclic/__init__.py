"""Even-pancyclicity toolkit for balanced bipartite digraphs.

Core model (digraph), exhaustive cycle search (cycles), dominating-pair
degree conditions (conditions), named example generators (families), claim
verdicts and randomized counterexample search (verify), and a command-line
front door (cli).
"""

from .digraph import (
    BipartiteDigraph,
    Degree,
    Digraph,
    DominatingPair,
    Side,
    Vertex,
    parse,
    random_bipartite,
    serialize,
)
from .cycles import (
    Bypass,
    Cycle,
    CycleSpectrum,
    PathWitness,
    check_cycle,
    check_path,
    cycle_spectrum,
    cycles_through_vertex,
    find_bypass,
    find_cycle_of_length,
    is_hamiltonian,
    is_valid_cycle,
    longest_non_hamiltonian_cycle,
)
from .conditions import (
    ConditionReport,
    HypothesisReport,
    Theorem,
    check_bk,
    check_theorem_hypotheses,
    check_two_sided_condition,
)
from .families import (
    Expectation,
    Family,
    FamilySpec,
    check_family,
    complete_bipartite,
    d6,
    d6_prime,
    d8,
    directed_cycle,
    evaluate_expectation,
    family_properties,
    generate,
    h_2m,
    h_m_m1_1,
    h_mm,
)
from .verify import (
    CellStats,
    D8Isomorphism,
    DirectedCycleWitness,
    HamiltonianWitness,
    IsomorphismWitness,
    PancyclicCertificate,
    SearchConfig,
    SearchReport,
    SearchTarget,
    TheoremVerdict,
    TwoAMinus2Cycle,
    Violation,
    ViolationRecord,
    iso_to_D8,
    run_search,
    sample_digraph,
    sample_seed,
    sweep_arc_subsets,
    verify_theorem,
    verify_theorem_1_6,
    verify_theorem_1_7,
    verify_theorem_1_8,
    verify_theorem_1_9,
    verify_theorem_1_10,
    write_violations,
)
from . import errors

__version__ = "0.1.0"

__all__ = [
    "BipartiteDigraph",
    "Bypass",
    "CellStats",
    "ConditionReport",
    "Cycle",
    "CycleSpectrum",
    "D8Isomorphism",
    "Degree",
    "Digraph",
    "DirectedCycleWitness",
    "DominatingPair",
    "Expectation",
    "Family",
    "FamilySpec",
    "HamiltonianWitness",
    "HypothesisReport",
    "IsomorphismWitness",
    "PancyclicCertificate",
    "PathWitness",
    "SearchConfig",
    "SearchReport",
    "SearchTarget",
    "Side",
    "Theorem",
    "TheoremVerdict",
    "TwoAMinus2Cycle",
    "Vertex",
    "Violation",
    "ViolationRecord",
    "check_bk",
    "check_cycle",
    "check_family",
    "check_path",
    "check_theorem_hypotheses",
    "check_two_sided_condition",
    "complete_bipartite",
    "cycle_spectrum",
    "cycles_through_vertex",
    "d6",
    "d6_prime",
    "d8",
    "directed_cycle",
    "errors",
    "evaluate_expectation",
    "family_properties",
    "find_bypass",
    "find_cycle_of_length",
    "generate",
    "h_2m",
    "h_m_m1_1",
    "h_mm",
    "is_hamiltonian",
    "is_valid_cycle",
    "iso_to_D8",
    "longest_non_hamiltonian_cycle",
    "parse",
    "random_bipartite",
    "run_search",
    "sample_digraph",
    "sample_seed",
    "serialize",
    "sweep_arc_subsets",
    "verify_theorem",
    "verify_theorem_1_6",
    "verify_theorem_1_7",
    "verify_theorem_1_8",
    "verify_theorem_1_9",
    "verify_theorem_1_10",
    "write_violations",
]
