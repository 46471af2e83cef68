"""Closed substrings, maximal right-closed arrays and maximal closed substrings."""

from .bench import generate_random, run_bench
from .closed import compact_representation, count_closed, enumerate_closed
from .core import (
    ClosedTriple,
    McsKind,
    McsOccurrence,
    MrcArray,
    MrcEntry,
    as_text,
    classify,
    entry_bound,
    validate_mrc,
)
from .mcs import Census, census, compute_mcs
from .mrc_partition import compute_mrc_partition
from .mrc_salcp import compute_mrc_salcp, union_with_changelist
from .oracle import brute_mcs, brute_mrc, is_closed, longest_border
from .search import max_mcs
from .suffix import SuffixStructs, build_suffix_structs
from .words import (
    FibCensus,
    fib_census_formula,
    fibonacci_word,
    thue_morse_word,
    tribonacci_word,
)

__version__ = "0.1.0"

__all__ = [
    "Census", "ClosedTriple", "FibCensus", "McsKind", "McsOccurrence", "MrcArray", "MrcEntry",
    "SuffixStructs", "as_text", "brute_mcs", "brute_mrc", "build_suffix_structs", "census",
    "classify", "compact_representation", "compute_mcs", "compute_mrc_partition",
    "compute_mrc_salcp", "count_closed", "entry_bound", "enumerate_closed", "fib_census_formula",
    "fibonacci_word", "generate_random", "is_closed", "longest_border", "max_mcs", "run_bench",
    "thue_morse_word", "tribonacci_word", "union_with_changelist", "validate_mrc",
]
