"""Lexicographically least squarefree and overlap-free words over the naturals."""

from .errors import (
    BudgetExceeded,
    BudgetExhausted,
    LexLeastError,
    NoExtension,
    NoInfiniteWord,
    NotProlongable,
)
from .words import Word, word, render, parse_word
from .patterns import Pattern, SQUARE, OVERLAP, parse_pattern, has_suffix_match, has_factor_match
from .avoidance import generate_lexleast, generate_backtracking, is_irreducible
from .morphisms import Morphism, apply, compose, iterate, fixed_point_stream
from .ruler import gamma, rho, w2_letter, w2_prefix
from .overlapfree import a, d, phi, psi, w2plus_letter, w2plus_prefix, w2plus_stream

__version__ = "0.1.0"
