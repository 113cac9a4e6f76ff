"""Periods of words, one-mismatch periodicity, and realizability of period sets."""

from .construct import construct_word, lemma1_fill
from .errors import (
    ConstructionImpossible,
    ConstructionMismatch,
    InvalidArgument,
    ResourceLimit,
    WalkStalled,
)
from .oracle import Catalog, enumerate_catalog, verify_theorem_equivalence
from .periodset import PeriodSet, check_condition_iii, check_condition_iv, deltas, pi_h
from .prop1 import (
    MismatchInstance,
    WalkSpec,
    WalkTrace,
    check_fine_wilf,
    check_prop1_instance,
    find_exercise_counterexamples,
    find_tightness_witnesses,
    stockpile_walk,
    verify_prop1_exhaustive,
)
from .words import (
    Word,
    border_lengths,
    coincide_except_one,
    has_period,
    min_period,
    periods,
    reverse,
)

__version__ = "0.1.0"
