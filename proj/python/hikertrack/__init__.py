"""Tracks, hiker maps, witness extraction, and exact partition numbers.

Thin re-export of the compiled core; see the project README for the
operations and their contracts.
"""

from ._core import (
    BudgetExceeded,
    Coloring,
    EndHomogeneity,
    GridCell,
    GridRow,
    HikerMap,
    InjectivityReport,
    KrtParseError,
    MonoCheck,
    MonoKind,
    MonochromaticWitness,
    PNumberReport,
    PigeonholeClass,
    StatementResult,
    StatementSpec,
    Track,
    TrackTrie,
    TrieNode,
    TrieStats,
    Variant,
    WitnessSequence,
    all_hiker_maps,
    binomial,
    build_track,
    build_track_trie,
    check_injectivity,
    colex_rank,
    colex_unrank,
    color_of,
    count_distinct_maps,
    exact_p,
    extract_monochromatic,
    find_end_homogeneous,
    hiker_map,
    is_end_homogeneous,
    is_monochromatic,
    longest_track_sequence,
    make_constant,
    make_parity,
    make_random,
    parse_krt,
    pigeonhole_extract,
    restrict_ground,
    statement_holds,
    theorem9_bound,
    verify_bound_grid,
    write_krt,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded",
    "Coloring",
    "EndHomogeneity",
    "GridCell",
    "GridRow",
    "HikerMap",
    "InjectivityReport",
    "KrtParseError",
    "MonoCheck",
    "MonoKind",
    "MonochromaticWitness",
    "PNumberReport",
    "PigeonholeClass",
    "StatementResult",
    "StatementSpec",
    "Track",
    "TrackTrie",
    "TrieNode",
    "TrieStats",
    "Variant",
    "WitnessSequence",
    "all_hiker_maps",
    "binomial",
    "build_track",
    "build_track_trie",
    "check_injectivity",
    "colex_rank",
    "colex_unrank",
    "color_of",
    "count_distinct_maps",
    "exact_p",
    "extract_monochromatic",
    "find_end_homogeneous",
    "hiker_map",
    "is_end_homogeneous",
    "is_monochromatic",
    "longest_track_sequence",
    "make_constant",
    "make_parity",
    "make_random",
    "parse_krt",
    "pigeonhole_extract",
    "restrict_ground",
    "statement_holds",
    "theorem9_bound",
    "verify_bound_grid",
    "write_krt",
]
