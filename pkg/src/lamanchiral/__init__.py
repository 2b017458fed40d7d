"""Exact two-dimensional chiral-operation calculus on Laman graphs.

Build Type I' graphs by edge-preserving vertex additions, run the
recursive weight-state construction, integrate the box parameters away
exactly, and verify the algebraic identities the whole thing rests on
(propagator relations, D-module rules, matrix-tree determinants,
Green's-function bounds).  Everything is exact rational arithmetic;
nothing here floats.
"""

from .chiral import (
    MuResult,
    WeightState,
    base_state,
    extend,
    momentum_residuals,
    mu_constant,
    mu_truncated,
    residue_d1,
    residue_d1_dmodule_check,
    state_from_sequence,
    triangle_oracle,
    verify_momentum_conservation,
    wedge2,
    weight_polynomial,
)
from .errors import (
    DisconnectedGraph,
    DuplicateEdge,
    DuplicateVertex,
    InputError,
    LamanChiralError,
    MissingEdge,
    MissingParentEdge,
    MissingVertex,
    NonpositiveOrder,
    NotTypeIPrime,
    SelfLoop,
    TooFewVertices,
    TruncationTooLarge,
    VerificationError,
)
from .exactalg import ExtForm, Poly, RatFun, Var
from .graphs import (
    DirectedGraph,
    Edge,
    connected_catalog,
    cut_sets,
    green_function,
    kirchhoff_det,
    kirchhoff_tree_sum,
    laplacian_det,
    laplacian_inverse,
    parse_weights,
    random_multigraph,
    symbolic_weights,
    verify_green_bound,
    verify_matrix_tree,
    weighted_laplacian,
)
from .jouanolou import (
    Certificate,
    d_action,
    gen_x,
    norm_q,
    propagator,
    verify_arnold,
    verify_arnold_corollary,
    verify_dbar_commute,
    verify_defining_relations,
    verify_derivative_rule,
    verify_generating_series,
)
from .laman import (
    LamanCheck,
    SimpleGraph,
    apply_henneberg,
    find_type1prime_sequence,
    henneberg_one,
    henneberg_one_prime,
    henneberg_two,
    is_laman,
    parse_sequence,
    realize,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # exact algebra
    "Var",
    "Poly",
    "RatFun",
    "ExtForm",
    # graphs
    "Edge",
    "DirectedGraph",
    "parse_weights",
    "symbolic_weights",
    "weighted_laplacian",
    "kirchhoff_tree_sum",
    "laplacian_det",
    "kirchhoff_det",
    "cut_sets",
    "laplacian_inverse",
    "green_function",
    "connected_catalog",
    "random_multigraph",
    "verify_matrix_tree",
    "verify_green_bound",
    # laman
    "SimpleGraph",
    "LamanCheck",
    "is_laman",
    "henneberg_one",
    "henneberg_one_prime",
    "henneberg_two",
    "apply_henneberg",
    "parse_sequence",
    "realize",
    "find_type1prime_sequence",
    # pair algebra
    "Certificate",
    "norm_q",
    "gen_x",
    "propagator",
    "d_action",
    "verify_arnold",
    "verify_arnold_corollary",
    "verify_generating_series",
    "verify_defining_relations",
    "verify_derivative_rule",
    "verify_dbar_commute",
    # weight states
    "WeightState",
    "MuResult",
    "wedge2",
    "base_state",
    "extend",
    "weight_polynomial",
    "state_from_sequence",
    "momentum_residuals",
    "mu_constant",
    "mu_truncated",
    "triangle_oracle",
    "residue_d1",
    "residue_d1_dmodule_check",
    "verify_momentum_conservation",
    # errors
    "LamanChiralError",
    "InputError",
    "VerificationError",
    "DisconnectedGraph",
    "TooFewVertices",
    "MissingVertex",
    "MissingEdge",
    "DuplicateVertex",
    "DuplicateEdge",
    "SelfLoop",
    "MissingParentEdge",
    "NotTypeIPrime",
    "TruncationTooLarge",
    "NonpositiveOrder",
]
