"""Abelian border arrays of binary words: computation, verification, counting."""

from .engine import (
    AUTO_THRESHOLD,
    BorderArray,
    StepWalk,
    all_border_lengths,
    border_array,
    border_array_incremental,
    border_array_naive,
    border_array_packed,
    shortest_border,
    step_walk,
)
from .enumerator import (
    BudgetExceeded,
    EnumNode,
    LetterPattern,
    bell_number,
    brute_force_valid,
    count_valid,
    enumerate_valid,
    equivalence_class_count,
    general_border_array,
    letter_canonical,
    ternary_upper_bound,
)
from .verifier import (
    ExtensionSet,
    InvalidBorderArray,
    VerifyOutcome,
    candidate_word,
    extensions,
    structural_precheck,
    verify,
)
from .words import (
    BinaryWord,
    GeneralWord,
    ParseError,
    build_prefix_ones,
    canonicalize,
    complement,
    ones_in,
    parse_general_word,
    parse_word,
)

__version__ = "0.1.0"
