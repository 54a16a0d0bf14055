"""Cross-checks between independent constructions, and pattern exploration."""

from __future__ import annotations

from dataclasses import dataclass

from .avoidance import iter_lexleast
from .overlapfree import (
    PHI_MAX_LETTER,
    Report,
    a,
    a0,
    a0_closed,
    a0_floor_sqrt_e,
    d,
    d_closed,
    phi,
    psi,
    psi_via_product,
    w2plus_letter,
    w2plus_prefix,
)
from .patterns import OVERLAP, SQUARE, Pattern
from .ruler import w2_letter, w2_prefix

__all__ = ["verify_tables", "verify_oracle", "ExploreReport", "explore"]

# largest k for which psi(0, k) is materialized in table checks (a(0,6) = 75973)
MATERIALIZE_K = 6


def verify_tables(k_max: int) -> Report:
    """Recurrences against closed forms, the sqrt(e) floor, and direct counts in ``psi``."""
    rep = Report(f"tables k_max={k_max}")
    r = rep.add("a0_closed_sum", "a0_floor_sqrt_e", "a_complement", "a_is_length",
                "d_closed_form", "d_column_sum", "d_is_count", "phi_image_length")
    for k in range(k_max + 1):
        r["a0_closed_sum"].record(a0_closed(k) == a0(k), f"k={k}")
        r["a0_floor_sqrt_e"].record(a0_floor_sqrt_e(k) == a0(k), f"k={k}")
        r["d_column_sum"].record(sum(d(h, k) for h in range(k + 1)) == a0(k), f"k={k}")
        for h in range(k + 1):
            r["a_complement"].record(a(k - h, k) + a(h, k) == 1 + a0(k), f"h={h},k={k}")
            r["d_closed_form"].record(d(h, k) == d_closed(h, k), f"h={h},k={k}")
    for k in range(min(k_max, MATERIALIZE_K) + 1):
        p0k = psi(0, k)
        for h in range(k + 1):
            r["a_is_length"].record(
                len(psi(h, k)) == a(h, k) == len(psi_via_product(h, k)), f"h={h},k={k}")
            r["d_is_count"].record(p0k.count(h) == d(h, k), f"h={h},k={k}")
    for h in range(min(k_max, MATERIALIZE_K, PHI_MAX_LETTER) + 1):
        r["phi_image_length"].record(
            len(phi().image(h)) == a(h, h + 1) == 2 * a0(h) + 1, f"h={h}")
    return rep


def verify_oracle(n: int) -> Report:
    """Greedy generation, morphism fixed point and closed-form access agree on ``n`` letters."""
    rep = Report(f"oracle n={n}")
    r = rep.add("overlap_greedy_vs_stream", "overlap_stream_vs_eval",
                "square_greedy_vs_stream", "square_stream_vs_valuation")
    plus = w2plus_prefix(n)
    ruler = w2_prefix(n)
    for name, seq, pattern in (("overlap", plus, OVERLAP), ("square", ruler, SQUARE)):
        greedy = iter_lexleast(pattern)
        res = r[f"{name}_greedy_vs_stream"]
        for i, c in enumerate(seq, 1):
            res.record(next(greedy) == c, f"n={i}")
            if not res.passed:
                break
    for res, seq, access in ((r["overlap_stream_vs_eval"], plus, w2plus_letter),
                             (r["square_stream_vs_valuation"], ruler, w2_letter)):
        for i, c in enumerate(seq, 1):
            res.record(access(i) == c, f"n={i}")
            if not res.passed:
                break
    return rep


@dataclass(frozen=True)
class ExploreReport:
    pattern: Pattern
    length: int
    letters: frozenset[int]
    threshold: int
    first_large: int | None  # 1-based position of the first letter >= threshold


def explore(pattern: Pattern, n: int, threshold: int = 3) -> ExploreReport:
    """Generate ``n`` greedy letters and report which letters occur.

    This is evidence about a prefix only; nothing is inferred about the
    infinite word.
    """
    seen: set[int] = set()
    first = None
    for i, c in zip(range(1, n + 1), iter_lexleast(pattern)):
        seen.add(c)
        if first is None and c >= threshold:
            first = i
    return ExploreReport(pattern, n, frozenset(seen), threshold, first)
