"""Exact combinatorial models of Hessenberg cohomology rings.

The package works over the integers throughout: polynomial classes on
permutation graphs, monomial bases of the associated quotient rings,
tableau bijections indexing those bases, and the generating functions
(Poincare polynomials, chromatic quasisymmetric functions) that tie the
pictures together.
"""

from .bijections import (
    TabPair,
    phi_b1,
    phi_b3,
    phi_nilpotent,
    psi_b1,
    psi_b3,
    psi_nilpotent,
    trace_phi_b1,
    trace_phi_b3,
    trace_phi_nilpotent,
)
from .cohomology import (
    BasisSet,
    DecompositionCounts,
    OrbitPartition,
    TransitionBlock,
    XYElement,
    XYMonomial,
    basis_B1,
    basis_B2,
    basis_B3,
    basis_nilpotent,
    basis_transpose,
    check_unimodular,
    coordinates,
    decomposition_counts,
    degree_gf,
    element_to_gkm,
    mirror_element,
    monomial_to_gkm,
    multiply,
    normal_form,
    permutation_orbits,
    transition_blocks,
    transpose_transition_blocks,
)
from .errors import (
    BasisMismatch,
    BelowDiagonal,
    DegenerateForm,
    DegreeTooLarge,
    EmptyInput,
    FormMismatch,
    GuardrailExceeded,
    HesscombError,
    InvalidPair,
    KeyNotFound,
    KOutOfRange,
    NonTerminating,
    NotInBasis,
    NotPTableau,
    NotSquare,
    NotSymmetric,
    NotWeaklyIncreasing,
    OddDegree,
    OutOfRange,
    ShapeMismatch,
    UnsupportedFormat,
)
from .gkm import (
    GkmClass,
    GkmEdge,
    GkmGraph,
    all_permutations,
    betti_numbers,
    build_gkm_graph,
    check_gkm_condition,
    class_t,
    class_x,
    class_y,
    class_y_one_row,
    class_y_transpose,
    dot_action,
    graded_quotient_rank,
    in_t_ideal,
    sn_fixed_rank,
    verify_relations,
)
from .goldens import GoldenResult, golden_store, lookup, verify_all
from .hessenberg import (
    FormTag,
    HessenbergFunction,
    IncGraph,
    PosetPh,
    all_hessenberg_functions,
    box_counts,
    classify_form,
    inc_graph,
    new_hessenberg,
    poset_of,
    transpose,
)
from .intpoly import IntPoly
from .poincare import (
    GKM_MAX_N,
    PoincareReport,
    closed_form,
    reconcile,
    via_basis_degrees,
    via_gkm,
    via_ptableaux,
)
from .qpoly import QPolynomial, q_factorial, q_int
from .symfunc import (
    SymFn,
    change_basis,
    csf_by_coloring,
    csf_schur_by_ptableaux,
    frobenius_from_decomposition,
    is_positive,
    omega,
    partitions_of,
)
from .tableaux import (
    InversionData,
    Partition,
    PTableau,
    conjugate,
    count_syt,
    enumerate_p_tableaux,
    enumerate_syt,
    inversions,
    is_p_tableau,
    specht_polynomial,
    syt_with_bottom_pair,
)

__version__ = "0.1.0"

__all__ = [
    "TabPair",
    "phi_b1",
    "phi_b3",
    "phi_nilpotent",
    "psi_b1",
    "psi_b3",
    "psi_nilpotent",
    "trace_phi_b1",
    "trace_phi_b3",
    "trace_phi_nilpotent",
    "BasisSet",
    "DecompositionCounts",
    "OrbitPartition",
    "TransitionBlock",
    "XYElement",
    "XYMonomial",
    "basis_B1",
    "basis_B2",
    "basis_B3",
    "basis_nilpotent",
    "basis_transpose",
    "check_unimodular",
    "coordinates",
    "decomposition_counts",
    "degree_gf",
    "element_to_gkm",
    "mirror_element",
    "monomial_to_gkm",
    "multiply",
    "normal_form",
    "permutation_orbits",
    "transition_blocks",
    "transpose_transition_blocks",
    "BasisMismatch",
    "BelowDiagonal",
    "DegenerateForm",
    "DegreeTooLarge",
    "EmptyInput",
    "FormMismatch",
    "GuardrailExceeded",
    "HesscombError",
    "InvalidPair",
    "KeyNotFound",
    "KOutOfRange",
    "NonTerminating",
    "NotInBasis",
    "NotPTableau",
    "NotSquare",
    "NotSymmetric",
    "NotWeaklyIncreasing",
    "OddDegree",
    "OutOfRange",
    "ShapeMismatch",
    "UnsupportedFormat",
    "GkmClass",
    "GkmEdge",
    "GkmGraph",
    "all_permutations",
    "betti_numbers",
    "build_gkm_graph",
    "check_gkm_condition",
    "class_t",
    "class_x",
    "class_y",
    "class_y_one_row",
    "class_y_transpose",
    "dot_action",
    "graded_quotient_rank",
    "in_t_ideal",
    "sn_fixed_rank",
    "verify_relations",
    "GoldenResult",
    "golden_store",
    "lookup",
    "verify_all",
    "FormTag",
    "HessenbergFunction",
    "IncGraph",
    "PosetPh",
    "all_hessenberg_functions",
    "box_counts",
    "classify_form",
    "inc_graph",
    "new_hessenberg",
    "poset_of",
    "transpose",
    "IntPoly",
    "GKM_MAX_N",
    "PoincareReport",
    "closed_form",
    "reconcile",
    "via_basis_degrees",
    "via_gkm",
    "via_ptableaux",
    "QPolynomial",
    "q_factorial",
    "q_int",
    "SymFn",
    "change_basis",
    "csf_by_coloring",
    "csf_schur_by_ptableaux",
    "frobenius_from_decomposition",
    "is_positive",
    "omega",
    "partitions_of",
    "InversionData",
    "Partition",
    "PTableau",
    "conjugate",
    "count_syt",
    "enumerate_p_tableaux",
    "enumerate_syt",
    "inversions",
    "is_p_tableau",
    "specht_polynomial",
    "syt_with_bottom_pair",
    "__version__",
]
