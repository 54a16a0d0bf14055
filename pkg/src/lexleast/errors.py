"""Exception types raised across the package."""

from __future__ import annotations


class LexLeastError(Exception):
    """Base class for every error raised by :mod:`lexleast`."""


class BudgetExceeded(LexLeastError):
    """A word would be longer than the configured materialization cap."""

    def __init__(self, predicted: int, cap: int, what: str = "word"):
        self.predicted = predicted
        self.cap = cap
        super().__init__(f"{what} of predicted length {predicted} exceeds cap {cap}")


class NoExtension(LexLeastError):
    """No letter of a finite alphabet extends the current word."""

    def __init__(self, word, max_letter: int):
        self.word = word
        self.max_letter = max_letter
        super().__init__(
            f"no letter in 0..{max_letter} extends a word of length {len(word)}"
        )


class NoInfiniteWord(LexLeastError):
    """Backtracking exhausted the alphabet at the root."""


class BudgetExhausted(LexLeastError):
    """Backtracking ran out of steps before reaching the requested length."""

    def __init__(self, stats):
        self.stats = stats
        super().__init__(
            f"step budget spent at length {len(stats.final)} after {stats.steps} steps"
        )


class NotProlongable(LexLeastError):
    """The seed's image does not start with the seed followed by a nonempty word."""
