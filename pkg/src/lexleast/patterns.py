"""Repetition patterns and suffix/factor predicates.

Every supported pattern is a family of words with a period ``q`` and a
minimal forbidden length ``min_length(q)``: a word contains a member of the
family with period ``q`` exactly when it has a factor of length at least
``min_length(q)`` with period ``q``.
"""

from __future__ import annotations

import enum
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

__all__ = [
    "Kind",
    "Pattern",
    "SQUARE",
    "OVERLAP",
    "square",
    "overlap",
    "power",
    "power_plus",
    "fractional",
    "parse_pattern",
    "has_suffix_match",
    "has_factor_match",
    "suffix_match_period",
    "longest_free_prefix",
]


class Kind(enum.Enum):
    SQUARE = "square"
    OVERLAP = "overlap"
    POWER = "power"
    POWER_PLUS = "power+"
    FRACTIONAL = "frac"


@dataclass(frozen=True)
class Pattern:
    kind: Kind
    n: int = 2
    num: int = 0
    den: int = 1
    strict: bool = False

    def __post_init__(self):
        if self.kind in (Kind.POWER, Kind.POWER_PLUS) and self.n < 2:
            raise ValueError(f"power patterns need n >= 2, got {self.n}")
        if self.kind is Kind.FRACTIONAL:
            if self.den <= 0 or self.num <= self.den:
                raise ValueError(f"fractional exponent {self.num}/{self.den} must exceed 1")
            g = math.gcd(self.num, self.den)
            object.__setattr__(self, "num", self.num // g)
            object.__setattr__(self, "den", self.den // g)

    def min_length(self, q: int) -> int:
        """Shortest member of the family with period ``q``."""
        k = self.kind
        if k is Kind.SQUARE:
            return 2 * q
        if k is Kind.OVERLAP:
            return 2 * q + 1
        if k is Kind.POWER:
            return self.n * q
        if k is Kind.POWER_PLUS:
            return self.n * q + 1
        # smallest L > q with L/q >= num/den (or > when strict)
        t = q * self.num
        if self.strict:
            length = t // self.den + 1
        else:
            length = -(-t // self.den)
        return max(length, q + 1)

    def excess(self, q: int) -> int:
        """``min_length(q) - 1 - q``: nondecreasing in ``q``."""
        return self.min_length(q) - 1 - q

    def periods_with_excess(self, e: int) -> range:
        """All periods ``q >= 1`` with ``excess(q) == e``."""
        k = self.kind
        if k is Kind.SQUARE:
            return range(e + 1, e + 2)
        if k is Kind.OVERLAP:
            return range(e, e + 1) if e >= 1 else range(0)
        if k in (Kind.POWER, Kind.POWER_PLUS):
            step = self.n - 1
            target = e + 1 if k is Kind.POWER else e
            if target >= step and target % step == 0:
                return range(target // step, target // step + 1)
            return range(0)
        lo, hi = 1, 2 * e + 4
        while self.excess(hi) < e:
            hi *= 2
        while lo < hi:
            mid = (lo + hi) // 2
            if self.excess(mid) < e:
                lo = mid + 1
            else:
                hi = mid
        end = lo
        while self.excess(end) == e:
            end += 1
        return range(lo, end)

    def __str__(self) -> str:
        k = self.kind
        if k in (Kind.SQUARE, Kind.OVERLAP):
            return k.value
        if k in (Kind.POWER, Kind.POWER_PLUS):
            return f"{k.value}:{self.n}"
        return f"frac:{self.num}/{self.den}" + (":strict" if self.strict else "")

    @property
    def exponent(self) -> Fraction:
        k = self.kind
        if k is Kind.SQUARE:
            return Fraction(2)
        if k is Kind.POWER:
            return Fraction(self.n)
        if k is Kind.FRACTIONAL:
            return Fraction(self.num, self.den)
        raise ValueError(f"{self} is not a plain power")


SQUARE = Pattern(Kind.SQUARE)
OVERLAP = Pattern(Kind.OVERLAP)


def square() -> Pattern:
    return SQUARE


def overlap() -> Pattern:
    return OVERLAP


def power(n: int) -> Pattern:
    return Pattern(Kind.POWER, n=n)


def power_plus(n: int) -> Pattern:
    return Pattern(Kind.POWER_PLUS, n=n)


def fractional(num: int, den: int, strict: bool = False) -> Pattern:
    return Pattern(Kind.FRACTIONAL, num=num, den=den, strict=strict)


_FRAC_RE = re.compile(r"^frac:(\d+)/(\d+)(:strict)?$")


def parse_pattern(text: str) -> Pattern:
    """Parse ``square``, ``overlap``, ``power:n``, ``power+:n`` or ``frac:num/den[:strict]``."""
    t = text.strip().lower()
    if t == "square":
        return SQUARE
    if t == "overlap":
        return OVERLAP
    for prefix, make in (("power+:", power_plus), ("power:", power)):
        if t.startswith(prefix):
            arg = t[len(prefix):]
            if not arg.isdigit():
                raise ValueError(f"bad pattern {text!r}")
            return make(int(arg))
    m = _FRAC_RE.match(t)
    if m:
        return fractional(int(m.group(1)), int(m.group(2)), strict=bool(m.group(3)))
    raise ValueError(f"unknown pattern {text!r}")


def suffix_match_period(w: Sequence[int], p: Pattern) -> int:
    """Smallest period of a suffix of ``w`` lying in ``p``, or 0 if there is none."""
    t = tuple(w)
    length = len(t)
    last = length - 1
    q = 1
    while True:
        need = p.min_length(q)
        if need > length:
            return 0
        # cheap rejection on the final letter before the full comparison
        if t[last] == t[last - q] and t[length - need + q:] == t[length - need:length - q]:
            return q
        q += 1


def has_suffix_match(w: Sequence[int], p: Pattern) -> bool:
    """True iff some suffix of ``w`` belongs to ``p``."""
    return suffix_match_period(w, p) != 0


def _max_run(mask: np.ndarray) -> int:
    if not mask.any():
        return 0
    padded = np.concatenate(([False], mask, [False]))
    edges = np.flatnonzero(padded[1:] != padded[:-1])
    return int((edges[1::2] - edges[::2]).max())


def has_factor_match(w: Sequence[int], p: Pattern) -> bool:
    """True iff some factor of ``w`` belongs to ``p``.

    For each period ``q`` the positions ``i`` with ``w[i] == w[i+q]`` are
    marked; a factor of period ``q`` and length ``L`` is a run of ``L - q``
    marks.
    """
    a = np.asarray(tuple(w), dtype=np.int64)
    n = len(a)
    q = 1
    while p.min_length(q) <= n:
        if _max_run(a[q:] == a[:-q]) >= p.min_length(q) - q:
            return True
        q += 1
    return False


def longest_free_prefix(w: Sequence[int], p: Pattern) -> int:
    """Length of the longest prefix of ``w`` avoiding ``p``."""
    from .tracker import RepetitionTracker

    tracker = RepetitionTracker(p)
    for c in w:
        if c in tracker.forbidden():
            break
        tracker.append(c)
    return len(tracker)
