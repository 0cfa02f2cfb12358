"""Hypergraph coloring and stable-set toolkit for bounded-matching-number
classes: polynomial-time solvers under a matching-number promise, brute-force
oracles, NP-hardness gadget builders, and independent verifiers."""

from .hypercore import (
    Hypergraph,
    LabeledGraph,
    Matching,
    PartialColoring,
    WeightedHypergraph,
    find_induced_matching,
    find_induced_one_edge,
    greedy_maximal_matching,
    hypergraph_to_labeled,
    is_k_bounded,
    is_k_uniform,
    is_linear,
    is_stable,
    is_valid_partial,
    labeled_to_hypergraph,
    max_matching_exact,
    validate_coloring,
)
from .solvers import (
    CapExceededError,
    ColoringCollection,
    PromiseViolationError,
    SolveResult,
    Verdict,
    brute_force_color,
    brute_force_extend,
    extension_potential,
    max_stable_set_bounded,
    max_weight_stable_set_bruteforce,
    precolor_extend_bounded,
    solve_2col_3bounded,
    solve_2col_htfree,
)
from .gadgets import (
    GadgetArtifact,
    GadgetCertificate,
    build_g1,
    build_g2,
    ltimes,
    mwss_gadget,
    uplift_bounded,
    uplift_precoloring,
    uplift_uniform,
)
from .reduction import ReductionOutput, lift_3coloring, reduce_3col_linear
from .edgecolor import is_proper_edge_coloring, max_degree, misra_gries_edge_color
from .formats import (
    ParseError,
    parse_certificate,
    parse_coloring,
    parse_hypergraph,
    parse_precoloring,
    parse_stable_set,
    serialize_certificate,
    serialize_coloring,
    serialize_hypergraph,
    serialize_precoloring,
    serialize_stable_set,
)
from .twosat import TwoSatInstance
from .verify import (
    CheckReport,
    check_certificate,
    verify_g1_dichotomy,
    verify_reduction,
)

__version__ = "0.1.0"
