"""Garside structure and the braid ordering on divisors of Delta_n^d."""

from .counting import (
    QuadraticSurd,
    TransitionMatrix,
    closed_form_height,
    complexity_via_matrix,
    count_last_factor,
    count_vector,
    height_via_matrix,
    table1,
    transition_matrix,
)
from .errors import CapExceededError
from .garside import (
    NormalForm,
    delta_power_word,
    delta_word,
    is_normal_pair,
    left_divides,
    left_gcd,
    normal_form,
    right_lcm,
)
from .lattice import (
    br_class_partition,
    classify_extremal,
    complexity,
    divisors,
    height,
    is_drawn,
    ordered_enumeration,
    quotient_sequence,
)
from .order import (
    OrderResult,
    Polarity,
    ReductionCapError,
    compare,
    jump_height,
    main_generator_index,
    reduce_to_sigma_consistent,
)
from .pascal3 import (
    burckel_code,
    burckel_representative,
    delta_np,
    is_burckel_normal,
    s_sequence,
    shortlex_compare,
    verify_pascal,
    w_sequence,
)
from .words import BraidWord, SimpleBraid, WordParseError, parse_word, render

__all__ = [
    "BraidWord",
    "CapExceededError",
    "NormalForm",
    "OrderResult",
    "Polarity",
    "QuadraticSurd",
    "ReductionCapError",
    "SimpleBraid",
    "TransitionMatrix",
    "WordParseError",
    "br_class_partition",
    "burckel_code",
    "burckel_representative",
    "classify_extremal",
    "closed_form_height",
    "compare",
    "complexity",
    "complexity_via_matrix",
    "count_last_factor",
    "count_vector",
    "delta_np",
    "delta_power_word",
    "delta_word",
    "divisors",
    "height",
    "height_via_matrix",
    "is_burckel_normal",
    "is_drawn",
    "is_normal_pair",
    "jump_height",
    "left_divides",
    "left_gcd",
    "main_generator_index",
    "normal_form",
    "ordered_enumeration",
    "parse_word",
    "quotient_sequence",
    "reduce_to_sigma_consistent",
    "render",
    "right_lcm",
    "s_sequence",
    "shortlex_compare",
    "table1",
    "transition_matrix",
    "verify_pascal",
    "w_sequence",
]
