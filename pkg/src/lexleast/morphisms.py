"""Morphisms of words over the natural numbers and their fixed points."""

from __future__ import annotations

import threading
from collections import Counter, deque
from itertools import chain
from typing import Callable, Iterable, Iterator, Mapping, Sequence

from .errors import BudgetExceeded, NotProlongable
from .words import Word, render, reverse

__all__ = [
    "DEFAULT_BUDGET",
    "Morphism",
    "from_images",
    "identity",
    "apply",
    "compose",
    "iterate",
    "reversed_morphism",
    "PrefixStream",
    "fixed_point_stream",
]

DEFAULT_BUDGET = 10**8


class Morphism:
    """A morphism given by a rule ``letter -> word``, with per-letter memo.

    ``length_rule(c, n)``, when supplied, returns ``|m^n(c)|`` without
    building the word; :func:`iterate` uses it for its budget check.
    """

    def __init__(self, rule: Callable[[int], Iterable[int]], name: str = "m",
                 length_rule: Callable[[int, int], int] | None = None):
        self._rule = rule
        self.name = name
        self.length_rule = length_rule
        self._memo: dict[int, Word] = {}
        self._lock = threading.Lock()

    def image(self, c: int) -> Word:
        img = self._memo.get(c)
        if img is None:
            if c < 0:
                raise ValueError(f"letters are natural numbers, got {c}")
            img = Word(self._rule(c))
            with self._lock:
                img = self._memo.setdefault(c, img)
        return img

    def __call__(self, w: Iterable[int]) -> Word:
        return apply(self, w)

    def __repr__(self) -> str:
        shown = ", ".join(f"{c}->{render(self.image(c))}" for c in range(3))
        return f"Morphism({self.name}: {shown}, ...)"


def from_images(images: Mapping[int, Sequence[int]] | Callable[[int], Iterable[int]],
                name: str = "m") -> Morphism:
    if callable(images):
        return Morphism(images, name)
    table = {c: Word(v) for c, v in images.items()}

    def rule(c: int) -> Word:
        try:
            return table[c]
        except KeyError:
            raise ValueError(f"{name} has no image for letter {c}") from None

    return Morphism(rule, name)


def identity() -> Morphism:
    return Morphism(lambda c: (c,), "id", length_rule=lambda c, n: 1)


def apply(m: Morphism, w: Iterable[int]) -> Word:
    image = m.image
    return Word(chain.from_iterable(image(c) for c in w))


def compose(g: Morphism, h: Morphism) -> Morphism:
    """The morphism ``g o h`` (apply ``h`` first)."""
    return Morphism(lambda c: apply(g, h.image(c)), f"{g.name}.{h.name}")


def _predicted_length(m: Morphism, n: int, c: int, budget: int) -> int:
    if m.length_rule is not None:
        return m.length_rule(c, n)
    counts = Counter({c: 1})
    for _ in range(n):
        nxt: Counter = Counter()
        for letter, k in counts.items():
            for d, j in Counter(m.image(letter)).items():
                nxt[d] += k * j
        counts = nxt
        if sum(counts.values()) > budget:
            break
    return sum(counts.values())


def iterate(m: Morphism, n: int, c: int, budget: int = DEFAULT_BUDGET) -> Word:
    """``m^n(c)``; raises :class:`BudgetExceeded` if it would exceed ``budget`` letters."""
    if n < 0:
        raise ValueError("iteration count must be non-negative")
    size = _predicted_length(m, n, c, budget)
    if size > budget:
        raise BudgetExceeded(size, budget, f"{m.name}^{n}({c})")
    w = Word((c,))
    for _ in range(n):
        w = apply(m, w)
    return w


def reversed_morphism(m: Morphism) -> Morphism:
    """Each image reversed, i.e. ``R o m o R``."""
    rule = m.length_rule
    return Morphism(lambda c: reverse(m.image(c)), f"{m.name}_R", length_rule=rule)


class PrefixStream:
    """Letters of the fixed point ``m^omega(c)``, produced on demand.

    Emitted letters wait in a queue until they are expanded: the fixed point
    ``s`` satisfies ``s = m(s)``, so once ``m(c)`` has been emitted the rest
    is the images of ``s[1], s[2], ...`` in order.
    """

    def __init__(self, m: Morphism, c: int):
        first = m.image(c)
        if len(first) < 2 or first[0] != c:
            raise NotProlongable(
                f"{m.name}({c}) = {render(first)} does not start with {c} followed by more letters"
            )
        self.morphism = m
        self.seed = c
        self.emitted = 0
        self._ready: deque[int] = deque(first)
        self._pending: deque[int] = deque(first[1:])

    def __iter__(self) -> Iterator[int]:
        return self

    def __next__(self) -> int:
        while not self._ready:
            if not self._pending:
                raise StopIteration
            img = self.morphism.image(self._pending.popleft())
            self._ready.extend(img)
            self._pending.extend(img)
        self.emitted += 1
        return self._ready.popleft()

    def take(self, n: int) -> Word:
        """The next ``n`` letters as a word."""
        out: list[int] = []
        ready, pending, image = self._ready, self._pending, self.morphism.image
        while len(out) < n:
            while not ready:
                if not pending:
                    raise ValueError("fixed point is finite")
                img = image(pending.popleft())
                ready.extend(img)
                pending.extend(img)
            k = min(n - len(out), len(ready))
            out.extend(ready.popleft() for _ in range(k))
        self.emitted += n
        return Word(out)


def fixed_point_stream(m: Morphism, c: int) -> PrefixStream:
    return PrefixStream(m, c)
