"""Minimal and divisible linear codes over GF(2), GF(3), GF(4).

Analysis (weight enumerators, minimum distance, minimality oracles,
bounds), constructions (simplex, circulant block grids, disjoint-subspace
two-weight codes), exhaustive minimum-length search, acute sets in the
0/1 hypercube, and an embedded corpus of published generator matrices
with a verification runner.
"""

from .code import (
    BudgetExceededError,
    Codeword,
    LinearCode,
    ParseError,
    WeightEnumerator,
    codewords,
    dual_code,
    format_matrix,
    macwilliams_dual,
    min_distance,
    parity_extend,
    parse_code,
    puncture,
    replicate,
    residual_code,
    weight_enumerator,
)
from .construct import (
    CirculantBlock,
    CirculantSpec,
    circulant,
    disjoint_subspaces_code,
    generalized_circulant,
    simplex,
)
from .geometry import (
    PointMultiset,
    all_projective_points,
    code_to_multiset,
    is_spanning,
    is_strong_blocking,
    multiset_to_code,
    normalize_point,
    project_through_point,
    reduce_to_set,
)
from .minimal import (
    BoundsReport,
    ashikhmin_barg,
    bounds_report,
    divisibility,
    griesmer_bound,
    is_minimal_geometric,
    is_minimal_support,
)
from .search import (
    AcuteSearchResult,
    AcuteSet,
    KNOWN_EXACT_LENGTHS,
    LengthVerdict,
    SearchResult,
    code_is_acute,
    count_right_angles,
    find_witness,
    max_acute_set,
    search_min_length,
    verify_length_value,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError", "Codeword", "LinearCode", "ParseError",
    "WeightEnumerator", "codewords", "dual_code", "format_matrix",
    "macwilliams_dual", "min_distance", "parity_extend", "parse_code",
    "puncture", "replicate", "residual_code", "weight_enumerator",
    "CirculantBlock", "CirculantSpec", "circulant", "disjoint_subspaces_code",
    "generalized_circulant", "simplex",
    "PointMultiset", "all_projective_points", "code_to_multiset",
    "is_spanning", "is_strong_blocking", "multiset_to_code",
    "normalize_point", "project_through_point", "reduce_to_set",
    "BoundsReport", "ashikhmin_barg", "bounds_report", "divisibility",
    "griesmer_bound", "is_minimal_geometric", "is_minimal_support",
    "AcuteSearchResult", "AcuteSet", "KNOWN_EXACT_LENGTHS", "LengthVerdict",
    "SearchResult", "code_is_acute", "count_right_angles", "find_witness",
    "max_acute_set", "search_min_length", "verify_length_value",
]
