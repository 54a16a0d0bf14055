"""Greedy and backtracking construction of pattern-free words; irreducibility.

The greedy (no-backtracking) generator appends, at every step, the least
letter that does not create a suffix in the pattern.  Over the natural
numbers it never gets stuck: a letter not yet used can always be appended.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .errors import BudgetExhausted, NoExtension, NoInfiniteWord
from .patterns import Pattern, has_suffix_match
from .tracker import RepetitionTracker
from .words import Word

__all__ = [
    "GreedyState",
    "greedy_step",
    "iter_lexleast",
    "generate_lexleast",
    "BacktrackEvent",
    "BacktrackStats",
    "generate_backtracking",
    "is_irreducible_at",
    "is_irreducible",
    "is_irreducible_after_first",
]


class GreedyState:
    """A growing pattern-free word, extended one least letter at a time.

    ``max_letter=None`` means the alphabet is all of the natural numbers;
    otherwise letters are drawn from ``0..max_letter``.
    """

    def __init__(self, pattern: Pattern, max_letter: int | None = None,
                 current: Sequence[int] = ()):
        self.pattern = pattern
        self.max_letter = max_letter
        self._tracker = RepetitionTracker(pattern)
        for c in current:
            if max_letter is not None and c > max_letter:
                raise ValueError(f"letter {c} outside 0..{max_letter}")
            if c in self._tracker.forbidden():
                raise ValueError("initial word does not avoid the pattern")
            self._tracker.append(c)

    @property
    def current(self) -> Word:
        return self._tracker.word()

    def __len__(self) -> int:
        return len(self._tracker)

    def step(self) -> int:
        c = self._tracker.least_allowed(self.max_letter)
        if c is None:
            raise NoExtension(self.current, self.max_letter)
        self._tracker.append(c)
        return c


def greedy_step(state: GreedyState) -> int:
    """Extend ``state`` by its least admissible letter and return that letter."""
    return state.step()


def iter_lexleast(p: Pattern) -> Iterator[int]:
    """Letters of the lexicographically least infinite ``p``-free word, one at a time."""
    state = GreedyState(p)
    while True:
        yield state.step()


def generate_lexleast(p: Pattern, n: int) -> Word:
    """Length-``n`` prefix of the lexicographically least infinite ``p``-free word."""
    if n < 0:
        raise ValueError("length must be non-negative")
    state = GreedyState(p)
    for _ in range(n):
        state.step()
    return state.current


@dataclass
class BacktrackEvent:
    """One retreat: every letter after ``stuck`` failed, so its last letter is bumped.

    ``resumed`` is the next pattern-free word the search reaches afterwards.
    """

    step: int
    position: int  # 1-based position whose letter was replaced
    removed: int  # number of trailing maximal letters dropped
    stuck: Word
    resumed: Word | None = None


@dataclass
class BacktrackStats:
    steps: int = 0
    replacements: int = 0
    backtracks: int = 0
    max_depth_retreat: int = 0
    final: Word = field(default_factory=Word)
    events: list[BacktrackEvent] = field(default_factory=list)


def generate_backtracking(p: Pattern, max_letter: int, n: int, step_budget: int,
                          *, max_events: int = 1000) -> BacktrackStats:
    """Backtracking search over the alphabet ``0..max_letter``.

    If the word has no suffix in ``p`` it is extended by ``0``; otherwise
    every trailing ``max_letter`` is removed and the last remaining letter
    is incremented.  Stops once a ``p``-free word of length ``n`` is reached.

    Raises :class:`NoInfiniteWord` when only maximal letters remain and
    :class:`BudgetExhausted` (carrying the partial stats) when more than
    ``step_budget`` steps would be needed.
    """
    if max_letter < 0:
        raise ValueError("max_letter must be >= 0")
    if step_budget <= 0:
        raise ValueError("step_budget must be positive")
    stats = BacktrackStats()
    w: list[int] = []
    clean = True  # w avoids p
    waiting: list[BacktrackEvent] = []
    while True:
        if clean and len(w) >= n:
            stats.final = Word(w)
            return stats
        if stats.steps >= step_budget:
            stats.final = Word(w)
            raise BudgetExhausted(stats)
        stats.steps += 1
        if clean:
            w.append(0)
        else:
            removed = 0
            while w and w[-1] == max_letter:
                w.pop()
                removed += 1
            if not w:
                stats.final = Word()
                raise NoInfiniteWord(
                    f"every word over 0..{max_letter} eventually contains {p}"
                )
            if removed:
                stats.backtracks += 1
                stats.max_depth_retreat = max(stats.max_depth_retreat, removed)
                if len(stats.events) < max_events:
                    ev = BacktrackEvent(stats.steps, len(w), removed, Word(w))
                    stats.events.append(ev)
                    waiting.append(ev)
            w[-1] += 1
            stats.replacements += 1
        clean = not has_suffix_match(w, p)
        if clean and waiting:
            done = Word(w)
            for ev in waiting:
                ev.resumed = done
            waiting.clear()


def is_irreducible_at(w: Sequence[int], pos: int, p: Pattern) -> bool:
    """Every smaller letter at 1-based ``pos`` creates a factor in ``p`` ending there."""
    if not 1 <= pos <= len(w):
        raise IndexError(f"position {pos} outside 1..{len(w)}")
    head = list(w[:pos - 1])
    for c in range(w[pos - 1]):
        if not has_suffix_match(head + [c], p):
            return False
    return True


def _irreducible_from(w: Sequence[int], p: Pattern, first: int) -> bool:
    w = tuple(w)
    tracker = RepetitionTracker(p)
    for i, c in enumerate(w):
        bad = tracker.forbidden()
        if i + 1 >= first and any(d not in bad for d in range(c)):
            return False
        if c in bad:
            # the prefix now contains the pattern; finish with direct checks
            return all(is_irreducible_at(w, j, p) for j in range(max(i + 2, first), len(w) + 1))
        tracker.append(c)
    return True


def is_irreducible(w: Sequence[int], p: Pattern) -> bool:
    return _irreducible_from(w, p, 1)


def is_irreducible_after_first(w: Sequence[int], p: Pattern) -> bool:
    return _irreducible_from(w, p, 2)
