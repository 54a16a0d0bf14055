"""Checking the palindrome, rotation and translation identities of the psi blocks."""

from __future__ import annotations

from lexleast.overlapfree import psi, verify_symmetries
from lexleast.words import reverse, rotate_right


def main() -> None:
    w = psi(0, 3)
    print("psi(0,3)            ", w)
    print("rotated right by one", rotate_right(w, 1))
    print("reversed            ", reverse(w))
    print("rotation equals reversal:", rotate_right(w, 1) == reverse(w))

    report = verify_symmetries(5)
    print()
    for line in report.lines():
        print(line)


if __name__ == "__main__":
    main()
