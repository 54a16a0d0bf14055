"""Online forbidden-letter computation for pattern-free words.

Let ``u`` be a word of length ``L`` that avoids a pattern ``p``.  Appending
``c`` creates a suffix in ``p`` exactly when, for some period ``q``, the
longest suffix of ``u`` with period ``q`` has length ``min_length(q) - 1``
and ``c == u[L - q]`` (0-based).  Writing ``f(j)`` for the longest common
suffix of ``u`` and ``u[:j]``, that suffix length is ``q + f(L - q)``, so
the condition is ``f(L - q) == p.excess(q)`` (it can never be larger while
``u`` avoids ``p``).

The distinct values taken by ``f`` are the lengths of the states on the
suffix-link path of a suffix automaton of ``u``.  For each such length only
the periods ``q`` with the matching excess need testing, and a test is a
single substring comparison, filtered by a rolling hash and confirmed
exactly.  On the morphic words studied here the path has logarithmic
length, which keeps greedy generation near-linear.
"""

from __future__ import annotations

from typing import Iterable

from .patterns import Pattern
from .words import Word

__all__ = ["RepetitionTracker"]

_MOD = (1 << 61) - 1
_BASE = 1_000_003


class RepetitionTracker:
    """Append-only word that keeps a suffix automaton and prefix hashes.

    The caller must only append letters outside :meth:`forbidden` (i.e.
    keep the word free of the pattern); results are undefined otherwise.
    """

    def __init__(self, pattern: Pattern, letters: Iterable[int] = ()):
        self.pattern = pattern
        self.letters: list[int] = []
        self._hash = [0]
        self._pow = [1]
        # suffix automaton: state lengths, suffix links, transitions
        self._len = [0]
        self._link = [-1]
        self._next: list[dict[int, int]] = [{}]
        self._last = 0
        self._periods: dict[int, range] = {}
        self.max_letter = -1
        for c in letters:
            self.append(c)

    def __len__(self) -> int:
        return len(self.letters)

    def word(self) -> Word:
        return Word(self.letters)

    def _substring_hash(self, i: int, j: int) -> int:
        return (self._hash[j] - self._hash[i] * self._pow[j - i]) % _MOD

    def _periods_for(self, e: int) -> range:
        r = self._periods.get(e)
        if r is None:
            r = self._periods[e] = self.pattern.periods_with_excess(e)
        return r

    def forbidden(self) -> set[int]:
        """Letters ``c`` for which ``word + c`` has a suffix in the pattern."""
        w = self.letters
        n = len(w)
        out: set[int] = set()
        v = self._last
        while v != -1:
            e = self._len[v]
            for q in self._periods_for(e):
                j = n - q
                if j < e:
                    # longer periods only move j further left
                    break
                if e == 0 or (
                    self._substring_hash(j - e, j) == self._substring_hash(n - e, n)
                    and w[j - e:j] == w[n - e:n]
                ):
                    out.add(w[j])
            v = self._link[v]
        return out

    def least_allowed(self, upto: int | None = None) -> int | None:
        """Least letter that keeps the word pattern-free, optionally capped."""
        bad = self.forbidden()
        c = 0
        while c in bad:
            c += 1
        if upto is not None and c > upto:
            return None
        return c

    def append(self, c: int) -> None:
        self.letters.append(c)
        if c > self.max_letter:
            self.max_letter = c
        self._hash.append((self._hash[-1] * _BASE + c + 1) % _MOD)
        self._pow.append(self._pow[-1] * _BASE % _MOD)

        ln, link, nxt = self._len, self._link, self._next
        cur = len(ln)
        ln.append(ln[self._last] + 1)
        link.append(0)
        nxt.append({})
        p = self._last
        while p != -1 and c not in nxt[p]:
            nxt[p][c] = cur
            p = link[p]
        if p != -1:
            q = nxt[p][c]
            if ln[p] + 1 == ln[q]:
                link[cur] = q
            else:
                clone = len(ln)
                ln.append(ln[p] + 1)
                link.append(link[q])
                nxt.append(dict(nxt[q]))
                while p != -1 and nxt[p].get(c) == q:
                    nxt[p][c] = clone
                    p = link[p]
                link[q] = clone
                link[cur] = clone
        self._last = cur
