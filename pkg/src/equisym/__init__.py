"""Surfaces with 4g-4 automorphisms: classification, strata, and Jacobians.

For genus ``g`` between 8 and 128 with ``g - 1`` prime, this package
enumerates every action of a group of order ``4g - 4`` on a genus-``g``
surface, partitions the actions into topological classes, verifies the
expected stratum pattern, constructs the boundary actions of larger
order together with their restrictions, realizes the series showing the
primality hypothesis is necessary, and computes exact isogeny
decompositions of the corresponding Jacobians by character theory over
cyclotomic integers.
"""

from .arith import is_prime, multiplicative_order
from .classify import (
    BOUNDARY_WORDS,
    Dihedral2Example,
    RestrictionWitness,
    StrataReport,
    StrataRow,
    X_HAT_WORDS,
    X_TILDE_WORDS,
    boundary_vectors,
    classify_genus,
    counterexample_dihedral2,
    counterexample_q8,
    f1_vector,
    f2_vector,
    groups_of_order_4q,
    restrict_action,
)
from .cyclotomic import Cyclotomic, cyclotomic_polynomial
from .errors import BudgetExceededError, InvariantError
from .fuchsian import (
    EXTENSION_TABLE,
    ExtensionRule,
    Signature,
    candidate_signatures,
    format_signature,
    normalized_area,
    parse_signature,
    possible_extensions,
    rh_genus,
    teich_dim,
)
from .genvec import (
    DEFAULT_BUDGET,
    ActionClass,
    GeneratingVector,
    action_genus,
    apply_automorphism,
    braid_move,
    enumerate_vectors,
    make_vector,
    orbit_classes,
    vector_satisfies,
    vector_to_json,
)
from .groups import (
    FiniteGroup,
    GroupMorphism,
    SubgroupHandle,
    are_isomorphic,
    automorphisms,
    build_group,
    commutator_subgroup,
    conjugacy_classes,
    cyclic,
    dihedral,
    dihedral2_semidirect,
    direct_product,
    element_order,
    elements_of_order,
    exponent,
    is_abelian,
    make_morphism,
    metacyclic,
    power,
    q8_times_cyclic,
    standard_name,
    subgroup_as_group,
    subgroup_generated,
)
from .jacobian import (
    DecompositionReport,
    FactorRow,
    decomposition_report,
    factor_dimension,
    is_admissible,
    quotient_branching,
    quotient_genus,
    quotient_genus_character_sum,
    relevant_reps,
)
from .reptheory import (
    Character,
    dihedral_characters,
    find_root_of_unity,
    fixed_dim,
    metacyclic4_characters,
    orbit_reps_k,
    verify_orthogonality,
)
from .selftest import (
    GOLDEN_CASES,
    CheckResult,
    GoldenCase,
    compute_golden,
    default_golden_dir,
    oracle_class_count,
    oracle_vector_count,
    run_selftest,
)

__version__ = "0.1.0"

__all__ = [
    "ActionClass",
    "BOUNDARY_WORDS",
    "BudgetExceededError",
    "Character",
    "CheckResult",
    "Cyclotomic",
    "DEFAULT_BUDGET",
    "DecompositionReport",
    "Dihedral2Example",
    "EXTENSION_TABLE",
    "ExtensionRule",
    "FactorRow",
    "FiniteGroup",
    "GOLDEN_CASES",
    "GeneratingVector",
    "GoldenCase",
    "GroupMorphism",
    "InvariantError",
    "RestrictionWitness",
    "Signature",
    "StrataReport",
    "StrataRow",
    "SubgroupHandle",
    "X_HAT_WORDS",
    "X_TILDE_WORDS",
    "action_genus",
    "apply_automorphism",
    "are_isomorphic",
    "automorphisms",
    "boundary_vectors",
    "braid_move",
    "build_group",
    "candidate_signatures",
    "classify_genus",
    "commutator_subgroup",
    "compute_golden",
    "conjugacy_classes",
    "counterexample_dihedral2",
    "counterexample_q8",
    "cyclic",
    "cyclotomic_polynomial",
    "decomposition_report",
    "default_golden_dir",
    "dihedral",
    "dihedral2_semidirect",
    "dihedral_characters",
    "direct_product",
    "element_order",
    "elements_of_order",
    "enumerate_vectors",
    "exponent",
    "f1_vector",
    "f2_vector",
    "factor_dimension",
    "find_root_of_unity",
    "fixed_dim",
    "format_signature",
    "groups_of_order_4q",
    "is_abelian",
    "is_admissible",
    "is_prime",
    "make_morphism",
    "make_vector",
    "metacyclic",
    "metacyclic4_characters",
    "multiplicative_order",
    "normalized_area",
    "oracle_class_count",
    "oracle_vector_count",
    "orbit_classes",
    "orbit_reps_k",
    "parse_signature",
    "possible_extensions",
    "power",
    "q8_times_cyclic",
    "quotient_branching",
    "quotient_genus",
    "quotient_genus_character_sum",
    "relevant_reps",
    "restrict_action",
    "rh_genus",
    "run_selftest",
    "standard_name",
    "subgroup_as_group",
    "subgroup_generated",
    "teich_dim",
    "vector_satisfies",
    "vector_to_json",
    "verify_orthogonality",
]
