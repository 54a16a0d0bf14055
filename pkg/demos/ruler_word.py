"""The least squarefree word over the naturals is the ruler sequence.

Greedy search, the fixed point of 0 -> 01, 1 -> 02, 2 -> 03, ... and the 2-adic
valuation all produce the same letters.
"""

from __future__ import annotations

from lexleast import SQUARE, generate_lexleast, w2_letter, w2_prefix
from lexleast.morphisms import iterate
from lexleast.ruler import gamma


def main() -> None:
    greedy = generate_lexleast(SQUARE, 64)
    print("greedy    ", greedy)
    print("fixed pt  ", w2_prefix(64))
    print("valuation ", "".join(str(w2_letter(i)) for i in range(1, 65)))

    print("\ngamma^i(0) doubles at each step:")
    for i in range(6):
        print(f"  i={i}: {iterate(gamma(), i, 0)}")

    print("\nletter j first appears at index 2^j:")
    prefix = w2_prefix(2**12)
    for j in range(13):
        print(f"  j={j:2d} at {prefix.index(j) + 1}")

    n = 10**30
    print(f"\nletter {n} of the ruler word: {w2_letter(n)}")


if __name__ == "__main__":
    main()
