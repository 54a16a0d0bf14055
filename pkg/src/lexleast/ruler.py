"""The lexicographically least squarefree word over the naturals: the ruler sequence.

Its n-th letter is the 2-adic valuation of n (OEIS A007814).  It is the
fixed point of ``gamma: i -> 0 (i+1)``, and ``rho`` (``0 -> empty``,
``i -> i-1``) undoes ``gamma``.
"""

from __future__ import annotations

from functools import lru_cache

from .morphisms import Morphism, fixed_point_stream, PrefixStream
from .words import Word

__all__ = ["gamma", "rho", "w2_letter", "w2_prefix", "w2_stream", "first_occurrence"]


@lru_cache(maxsize=None)
def gamma() -> Morphism:
    return Morphism(lambda i: (0, i + 1), "gamma", length_rule=lambda c, n: 1 << n)


@lru_cache(maxsize=None)
def rho() -> Morphism:
    return Morphism(lambda i: (i - 1,) if i else (), "rho")


def w2_letter(i: int) -> int:
    """Letter at 1-based position ``i``: the exponent of 2 in ``i``."""
    if i < 1:
        raise ValueError(f"positions start at 1, got {i}")
    return (i & -i).bit_length() - 1


def w2_stream() -> PrefixStream:
    return fixed_point_stream(gamma(), 0)


def w2_prefix(n: int) -> Word:
    if n < 0:
        raise ValueError("length must be non-negative")
    return w2_stream().take(n)


def first_occurrence(j: int) -> int:
    """1-based index where letter ``j`` first appears."""
    return 1 << j
