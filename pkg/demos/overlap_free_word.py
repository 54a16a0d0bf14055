"""Building the least overlap-free word from its morphism.

Each phi(h) is assembled from the previous square-like block; iterating phi from 0
reproduces what greedy search finds letter by letter.
"""

from __future__ import annotations

from lexleast import OVERLAP, generate_lexleast, w2plus_prefix
from lexleast.overlapfree import a, a0, phi, psi


def main() -> None:
    for h in range(4):
        img = phi().image(h)
        shown = str(img) if len(img) < 60 else f"{str(img)[:56]}... ({len(img)} letters)"
        print(f"phi({h}) = {shown}")

    print("\nblock lengths a(h, k):")
    for h in range(6):
        print("  " + " ".join(f"{a(h, k):6d}" if k >= h else "      " for k in range(6)))

    print("\npsi(0,3), the prefix up to the first 3:")
    print(" ", psi(0, 3))

    n = 5000
    same = generate_lexleast(OVERLAP, n) == w2plus_prefix(n)
    print(f"\ngreedy and fixed point agree on {n} letters: {same}")
    print(f"a(0,k) for k = 0..10: {[a0(k) for k in range(11)]}")


if __name__ == "__main__":
    main()
