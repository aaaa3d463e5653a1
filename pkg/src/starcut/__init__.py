"""Star-structure cuts of hypercubes and folded hypercubes.

Exact constructions, rational dimension thresholds, and desk-scale
solvers/checkers for minimum star-cut sizes of the Q and FQ families.
"""

from .bounds import (
    KnownValue,
    conjectured_value,
    kappa_g_formula,
    known_value,
    min_guaranteed_dim,
    neighborhood_bound_formula,
    tables_tsv,
    threshold,
    threshold_fq,
    threshold_q,
)
from .graphs import (
    FQ,
    Q,
    Graph,
    InvalidVertex,
    PositionOutOfRange,
    SizeOutOfRange,
    TooLarge,
    flip,
    folded_hypercube,
    hypercube,
    min_vertex_cut,
    parse_vertex,
    vertex_bits,
)
from .oracles import (
    Infeasible,
    LemmaReport,
    MoreThan,
    SearchBudget,
    SolveResult,
    brute_kappa_g,
    check_common_neighbors,
    check_star_bounds,
    is_structure_cut,
    min_neighborhood,
    min_star_cut,
    star_cover_number,
    structure_cut_violation,
)
from .stars import (
    CutFamily,
    IntersectionReport,
    NoCutKnown,
    Star,
    Unsupported,
    build_fqn_cut,
    build_qn_cut,
    family_intersections,
    read_witness,
    validate_star,
    write_witness,
)

__all__ = [
    "FQ",
    "Q",
    "CutFamily",
    "Graph",
    "Infeasible",
    "IntersectionReport",
    "InvalidVertex",
    "KnownValue",
    "LemmaReport",
    "MoreThan",
    "NoCutKnown",
    "PositionOutOfRange",
    "SearchBudget",
    "SizeOutOfRange",
    "SolveResult",
    "Star",
    "TooLarge",
    "Unsupported",
    "brute_kappa_g",
    "build_fqn_cut",
    "build_qn_cut",
    "check_common_neighbors",
    "check_star_bounds",
    "conjectured_value",
    "family_intersections",
    "flip",
    "folded_hypercube",
    "hypercube",
    "is_structure_cut",
    "kappa_g_formula",
    "known_value",
    "min_guaranteed_dim",
    "min_neighborhood",
    "min_star_cut",
    "min_vertex_cut",
    "neighborhood_bound_formula",
    "parse_vertex",
    "read_witness",
    "star_cover_number",
    "structure_cut_violation",
    "tables_tsv",
    "threshold",
    "threshold_fq",
    "threshold_q",
    "validate_star",
    "vertex_bits",
    "write_witness",
]
