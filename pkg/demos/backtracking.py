"""Greedy search over three letters gets stuck; backtracking recovers.

Over {0,1,2} the word 0102010 cannot be extended without a square, so the search
has to revise earlier choices.  Over an unbounded alphabet no revision is ever
needed.
"""

from __future__ import annotations

from lexleast import OVERLAP, SQUARE, generate_backtracking, generate_lexleast
from lexleast.avoidance import GreedyState
from lexleast.errors import NoExtension


def main() -> None:
    state = GreedyState(SQUARE, max_letter=2)
    try:
        while True:
            state.step()
    except NoExtension:
        print(f"plain greedy over {{0,1,2}} is stuck at {state.current}")

    stats = generate_backtracking(SQUARE, 2, 60, 10**6)
    for ev in stats.events[:5]:
        print(f"  step {ev.step}: stuck at {ev.stuck}, drop {ev.removed}, continue from {ev.resumed}")
    print(f"{stats.backtracks} backtracks, {stats.steps} steps")
    print(f"least ternary squarefree prefix: {stats.final}")

    stats = generate_backtracking(OVERLAP, 9, 500, 10**6)
    print(f"\noverlaps over 0..9: {stats.backtracks} backtracks; "
          f"same as greedy: {stats.final == generate_lexleast(OVERLAP, 500)}")


if __name__ == "__main__":
    main()
