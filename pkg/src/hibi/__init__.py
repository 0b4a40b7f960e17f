"""Divisorial combinatorics of finite posets with a unique bottom.

The package computes, for a finite poset P with bottom x0 and a virtual
top, the integer labelings that form the twisted modules T^(n), their
minimal generators, the reduced alternating sequences that witness
minimality, polytope sections of the fiber cones with their dimensions,
analytic spreads, levelness and Gorenstein tests, and piece-counting
tables for the twisted construction in prime characteristic.
"""

from .birkhoff import (
    DistLattice,
    build_dist_lattice,
    hibi_generators,
    is_distributive,
    join_irreducibles,
    lattice_from_poset,
    poset_isomorphic,
)
from .cones import (
    ConeSection,
    affine_witnesses,
    build_C,
    dim_bruteforce,
    dim_formula,
    ehrhart_counts,
    is_standard,
    lattice_points,
    witness_partition,
)
from .corpus import BUILTIN_NAMES, all_builtins, builtin, upward_pure
from .documents import PosetDocument, parse_poset_document, serialize_poset_document
from .errors import (
    BudgetExceeded,
    DocumentError,
    InvalidPoset,
    NotALattice,
    NotDistributive,
)
from .fiber import (
    analytic_spread,
    degree_range,
    fiber_cone_decomposition,
    fiber_hilbert,
    generators_via_sequences,
    is_anticanonical_level,
    is_gorenstein,
    is_level,
)
from .frobenius import (
    Budget,
    Polytope,
    TComplexityTable,
    c_e_ehrhart,
    c_e_fiber,
    c_e_polytope,
    h_e_ehrhart,
    h_e_fiber,
    h_e_polytope,
    t_piece,
    tcx_report,
)
from .labelings import (
    Labeling,
    exist_witness,
    from_dict,
    generators,
    in_T,
    indicator,
    is_minimal,
    label_max,
    label_min,
    leq_T,
    split,
    t_box,
    truncate,
    zero_labeling,
)
from .poset import (
    TOP,
    Poset,
    build_poset,
    dist,
    is_pure,
    p_nonmax,
    p_nonmin,
    poset_ideals,
    qdist,
)
from .sequences import (
    CondNSeq,
    as_seq,
    enumerate_N,
    is_q_reduced,
    mu,
    nu_down,
    nu_up,
    q0,
    q_max,
    q_value,
    satisfies_condN,
    shifted_family,
    witness_sequence,
)

__version__ = "0.1.0"

__all__ = [
    "TOP",
    "Poset",
    "Labeling",
    "CondNSeq",
    "ConeSection",
    "DistLattice",
    "PosetDocument",
    "Budget",
    "Polytope",
    "TComplexityTable",
    "InvalidPoset",
    "NotALattice",
    "NotDistributive",
    "BudgetExceeded",
    "DocumentError",
    "build_poset",
    "dist",
    "qdist",
    "poset_ideals",
    "is_pure",
    "p_nonmax",
    "p_nonmin",
    "zero_labeling",
    "from_dict",
    "indicator",
    "label_max",
    "label_min",
    "in_T",
    "leq_T",
    "is_minimal",
    "t_box",
    "generators",
    "split",
    "truncate",
    "exist_witness",
    "as_seq",
    "satisfies_condN",
    "q_value",
    "is_q_reduced",
    "enumerate_N",
    "mu",
    "nu_down",
    "nu_up",
    "shifted_family",
    "witness_sequence",
    "q0",
    "q_max",
    "build_C",
    "dim_formula",
    "dim_bruteforce",
    "lattice_points",
    "affine_witnesses",
    "witness_partition",
    "is_standard",
    "ehrhart_counts",
    "fiber_hilbert",
    "analytic_spread",
    "degree_range",
    "is_level",
    "is_anticanonical_level",
    "is_gorenstein",
    "fiber_cone_decomposition",
    "generators_via_sequences",
    "build_dist_lattice",
    "is_distributive",
    "lattice_from_poset",
    "join_irreducibles",
    "hibi_generators",
    "poset_isomorphic",
    "t_piece",
    "c_e_fiber",
    "c_e_ehrhart",
    "c_e_polytope",
    "h_e_fiber",
    "h_e_ehrhart",
    "h_e_polytope",
    "tcx_report",
    "BUILTIN_NAMES",
    "builtin",
    "all_builtins",
    "upward_pure",
    "parse_poset_document",
    "serialize_poset_document",
]
