"""Least words avoiding fractional powers, and which letters they use.

Only prefixes are inspected here; what happens further out is left open.
"""

from __future__ import annotations

import sys

from lexleast.checks import explore
from lexleast.patterns import parse_pattern


def main(n: int = 20000) -> None:
    for text in ["frac:5/2", "frac:7/3", "power:3", "frac:3/2:strict"]:
        rep = explore(parse_pattern(text), n)
        first = "none" if rep.first_large is None else rep.first_large
        print(f"{text:16s} letters in first {n}: {sorted(rep.letters)}; first letter >= 3 at {first}")


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 20000)
