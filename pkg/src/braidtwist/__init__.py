"""Half-twist power recognition, root extraction and combing in braid groups."""

from .braid import (
    BraidError,
    BraidWord,
    CrossingMatrix,
    Permutation,
    concat,
    conjugate,
    crossing_matrix,
    delete_strand,
    exponent_sum,
    free_cancel,
    invert,
    is_positive,
    make_word,
    parse_word,
    permutation,
    power,
)
from .combing import comb, in_A_n
from .free import FreeWord, conjugate_to_generator_power, cyclic_reduce, embed
from .halftwist import (
    FailedStep,
    Identity,
    NotPower,
    Power,
    Undecided,
    classify,
    random_half_twist_power,
)
from .word_problem import BudgetExceeded, equal, is_trivial, normal_form, positive_equal

__version__ = "0.1.0"
