"""Finite words over the natural numbers.

A :class:`Word` is an immutable tuple of non-negative ints.  Python indexing
and slicing stay 0-based; :meth:`Word.at` gives the 1-based letter access
used when talking about positions in infinite words.
"""

from __future__ import annotations

import enum
from collections.abc import Iterable, Iterator
from itertools import chain

__all__ = [
    "Word",
    "EMPTY",
    "Ordering",
    "word",
    "parse_word",
    "render",
    "concat",
    "rotate_right",
    "rotate_left",
    "reverse",
    "lex_compare",
    "count_letter",
    "is_prefix",
    "is_suffix",
    "is_factor",
    "find",
    "remove_prefix",
    "remove_suffix",
    "is_palindrome",
]


class Word(tuple):
    """Immutable word; a tuple of letters with word-flavoured operations."""

    __slots__ = ()

    def __new__(cls, letters: Iterable[int] = ()):
        return super().__new__(cls, letters)

    def __getitem__(self, item):
        if isinstance(item, slice):
            return Word(tuple.__getitem__(self, item))
        return tuple.__getitem__(self, item)

    def __add__(self, other):
        return Word(chain(self, other))

    def __radd__(self, other):
        return Word(chain(other, self))

    def __mul__(self, n: int):
        return Word(tuple.__mul__(self, n))

    __rmul__ = __mul__

    def at(self, n: int) -> int:
        """Letter at 1-based position ``n``."""
        if not 1 <= n <= len(self):
            raise IndexError(f"position {n} outside 1..{len(self)}")
        return tuple.__getitem__(self, n - 1)

    def __repr__(self) -> str:
        text = render(self)
        if len(text) > 60:
            text = text[:57] + "..."
        return f"Word({text!r}, length={len(self)})"

    def __str__(self) -> str:
        return render(self)


EMPTY = Word()


def word(*letters) -> Word:
    """Build a word from letters or from a single rendered string.

    >>> word("0102") == word(0, 1, 0, 2)
    True
    """
    if len(letters) == 1 and isinstance(letters[0], str):
        return parse_word(letters[0])
    if len(letters) == 1 and not isinstance(letters[0], int):
        return Word(letters[0])
    return Word(letters)


def parse_word(text: str) -> Word:
    """Inverse of :func:`render`: ``"0102"`` or ``"0,1,10"``."""
    text = text.strip()
    if not text:
        return EMPTY
    if "," in text:
        parts = [p.strip() for p in text.rstrip(",").split(",")]
    else:
        parts = list(text)
    letters = []
    for p in parts:
        if not p.isdigit():
            raise ValueError(f"not a letter: {p!r}")
        letters.append(int(p))
    return Word(letters)


def render(w: Iterable[int]) -> str:
    """Digit string when every letter is at most 9, else comma-separated.

    A lone letter above 9 gets a trailing comma so that it parses back as
    one letter.
    """
    w = tuple(w)
    if all(c <= 9 for c in w):
        return "".join(map(str, w))
    text = ",".join(map(str, w))
    return text + "," if len(w) == 1 else text


def concat(*words: Iterable[int]) -> Word:
    return Word(chain.from_iterable(words))


def rotate_right(w: Word, m: int) -> Word:
    """Move the last ``m mod |w|`` letters to the front (the inverse shift applied m times)."""
    if not w:
        raise ValueError("cyclic shift of the empty word is undefined")
    m %= len(w)
    if m == 0:
        return Word(w)
    return Word(chain(w[len(w) - m:], w[:len(w) - m]))


def rotate_left(w: Word, m: int) -> Word:
    if not w:
        raise ValueError("cyclic shift of the empty word is undefined")
    return rotate_right(w, -m)


def reverse(w: Iterable[int]) -> Word:
    return Word(tuple(w)[::-1])


class Ordering(enum.Enum):
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"
    X_PREFIX_OF_Y = "x-prefix-of-y"
    Y_PREFIX_OF_X = "y-prefix-of-x"

    @property
    def le(self) -> bool:
        """True when x <= y in the lexicographic order (prefixes count as smaller)."""
        return self in (Ordering.LESS, Ordering.EQUAL, Ordering.X_PREFIX_OF_Y)


def lex_compare(x: Iterable[int], y: Iterable[int]) -> Ordering:
    """Compare two words or letter streams.

    Streams are consumed only up to the first difference, so an infinite
    iterator may be compared against a finite word.  Two infinite equal
    streams never return.
    """
    ix: Iterator[int] = iter(x)
    iy: Iterator[int] = iter(y)
    sentinel = object()
    while True:
        a = next(ix, sentinel)
        b = next(iy, sentinel)
        if a is sentinel and b is sentinel:
            return Ordering.EQUAL
        if a is sentinel:
            return Ordering.X_PREFIX_OF_Y
        if b is sentinel:
            return Ordering.Y_PREFIX_OF_X
        if a != b:
            return Ordering.LESS if a < b else Ordering.GREATER


def count_letter(w: Iterable[int], c: int) -> int:
    if isinstance(w, tuple):
        return w.count(c)
    return sum(1 for x in w if x == c)


def is_prefix(y: Word, w: Word) -> bool:
    return len(y) <= len(w) and tuple.__getitem__(w, slice(0, len(y))) == tuple(y)


def is_suffix(y: Word, w: Word) -> bool:
    return len(y) <= len(w) and tuple.__getitem__(w, slice(len(w) - len(y), None)) == tuple(y)


def find(w: Word, y: Word, start: int = 1) -> int:
    """1-based position of the first occurrence of ``y`` in ``w`` at or after ``start``; 0 if absent."""
    y = tuple(y)
    m = len(y)
    for i in range(max(start, 1) - 1, len(w) - m + 1):
        if tuple.__getitem__(w, slice(i, i + m)) == y:
            return i + 1
    return 0


def is_factor(y: Word, w: Word) -> bool:
    return find(w, y) != 0


def remove_prefix(y: Word, w: Word) -> Word:
    """The word ``y^-1 w``."""
    if not is_prefix(y, w):
        raise ValueError(f"{render(y)} is not a prefix of {render(w)}")
    return Word(tuple.__getitem__(w, slice(len(y), None)))


def remove_suffix(w: Word, y: Word) -> Word:
    """The word ``w y^-1``."""
    if not is_suffix(y, w):
        raise ValueError(f"{render(y)} is not a suffix of {render(w)}")
    return Word(tuple.__getitem__(w, slice(0, len(w) - len(y))))


def is_palindrome(w: Word) -> bool:
    t = tuple(w)
    return t == t[::-1]
