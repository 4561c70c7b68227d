"""Pattern avoidance with morphic and antimorphic involutions."""
from .involutions import Involution, Mode, apply_involution, enumerate_involutions, parse_involution
from .patterns import (
    Occurrence,
    Pattern,
    Term,
    build_instance,
    erase_theta,
    find_occurrence,
    find_occurrence_any_involution,
    iter_occurrences,
    parse_pattern,
    split_theta,
    theta_complement,
)
from .words import (
    THUE_MORSE,
    Alphabet,
    Composed,
    Fixpoint,
    Literal,
    Morphism,
    Word,
    apply_morphism,
    factors,
    fixpoint_prefix,
    parse_wordspec,
    realize_word,
)
