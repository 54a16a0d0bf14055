"""Reading single letters of the overlap-free word at astronomical positions."""

from __future__ import annotations

import time

from lexleast import w2plus_prefix
from lexleast.overlapfree import w2plus_eval


def main() -> None:
    prefix = w2plus_prefix(1000)
    ok = all(w2plus_eval(i).letter == c for i, c in enumerate(prefix, 1))
    print(f"eval matches the first 1000 streamed letters: {ok}")

    for n in [6331, 10**6, 10**100, 2**4000 + 1]:
        t = time.perf_counter()
        res = w2plus_eval(n)
        ms = (time.perf_counter() - t) * 1000
        label = str(n) if n < 10**12 else f"~10^{len(str(n)) - 1}"
        print(f"n={label:>10}: letter {res.letter}, block level k={res.k}, "
              f"{res.steps} steps (3k^2 = {3 * res.k**2}), {ms:.2f} ms")


if __name__ == "__main__":
    main()
