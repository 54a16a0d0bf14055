"""The lexicographically least overlap-free word over the naturals.

``phi`` is the morphism ``h -> S^-1(phi^h(00)) (h+1)``, where ``S^-1``
moves the last letter to the front::

    phi(0) = 001
    phi(1) = 1001002
    phi(2) = 200100110010020010011001003

Its fixed point ``phi^omega(0)`` is the least infinite overlap-free word
and ``psi(h, k) = phi^(k-h)(h)`` is the least overlap-free word from ``h``
to ``k``.  Lengths ``a(h, k)`` and letter counts ``d(h, k)`` of these
words obey simple recurrences, which makes random access to the infinite
word cost a polynomial in ``log n``.
"""

from __future__ import annotations

import csv
import io
import json
import math
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import mpmath
from mpmath.libmp import round_floor, to_int

from .errors import BudgetExceeded
from .morphisms import (
    DEFAULT_BUDGET,
    Morphism,
    PrefixStream,
    apply,
    fixed_point_stream,
    iterate,
    reversed_morphism,
)
from .words import (
    Word,
    is_palindrome,
    is_prefix,
    is_suffix,
    remove_suffix,
    render,
    reverse,
    rotate_right,
)

__all__ = [
    "PHI_MAX_LETTER",
    "a",
    "a0",
    "a0_closed",
    "a0_floor_sqrt_e",
    "d",
    "d_closed",
    "phi",
    "phi_reversed",
    "psi",
    "psi_via_product",
    "EvalResult",
    "w2plus_eval",
    "w2plus_letter",
    "w2plus_stream",
    "w2plus_prefix",
    "FrequencyReport",
    "letter_frequency_report",
    "CheckResult",
    "Report",
    "verify_symmetries",
    "table",
    "table_to_csv",
    "table_from_csv",
    "table_to_json",
    "table_from_json",
]

PHI_MAX_LETTER = 8

# ---------------------------------------------------------------- lengths

_a0_values = [1]
_a0_lock = threading.Lock()


def a0(k: int) -> int:
    """``a(0, k)``: 1, 3, 13, 79, 633, ... (OEIS A010844)."""
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    if k >= len(_a0_values):
        with _a0_lock:
            vals = _a0_values
            while len(vals) <= k:
                j = len(vals)
                vals.append(2 * j * vals[-1] + 1)
    return _a0_values[k]


def _check_pair(h: int, k: int) -> None:
    if h < 0 or k < 0:
        raise ValueError("letters are natural numbers")
    if h > k:
        raise ValueError(f"need h <= k, got h={h}, k={k}")


def a(h: int, k: int) -> int:
    """Length of ``psi(h, k)``."""
    _check_pair(h, k)
    if k == 0:
        return 1
    return 2 * (k - h) * a0(k - 1) + 1


def a0_closed(k: int) -> int:
    """``sum_{l=0..k} 2^k k! / (2^l l!)``, evaluated as an exact integer sum."""
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    total = 0
    term = 1  # 2^(k-l) k!/l! at l = k
    for l in range(k, -1, -1):
        total += term
        term *= 2 * l
    return total


def a0_floor_sqrt_e(k: int, extra_bits: int = 64) -> int | None:
    """``floor(2^k k! sqrt(e))`` by interval arithmetic.

    Returns ``None`` when the enclosing interval straddles an integer at the
    chosen precision, so a returned value is certified.
    """
    n = (1 << k) * math.factorial(k)
    bits = max(n.bit_length(), math.ceil(k * math.log2(max(k, 2)))) + extra_bits
    ctx = mpmath.iv
    old = ctx.prec
    try:
        ctx.prec = bits
        x = ctx.sqrt(ctx.e) * ctx.mpf(n)
        lo, hi = x._mpi_
        flo, fhi = to_int(lo, round_floor), to_int(hi, round_floor)
    finally:
        ctx.prec = old
    return flo if flo == fhi else None


def d(h: int, k: int) -> int:
    """Number of occurrences of ``h`` in ``psi(0, k)``, from ``d(h,k) = 2k d(h,k-1)``."""
    _check_pair(h, k)
    value = 1
    for j in range(h + 1, k + 1):
        value *= 2 * j
    return value


def d_closed(h: int, k: int) -> int:
    _check_pair(h, k)
    return (1 << (k - h)) * math.factorial(k) // math.factorial(h)


# ---------------------------------------------------------------- morphism

@lru_cache(maxsize=None)
def phi(max_letter: int = PHI_MAX_LETTER) -> Morphism:
    """The overlap-free morphism; images of letters above ``max_letter`` are refused.

    ``phi(h)`` has ``2 a(0, h) + 1`` letters, so the cap bounds memory.
    """
    powers: list[Word] = [Word((0, 0))]  # phi^j(00)
    lock = threading.RLock()

    def rule(h: int) -> Word:
        if h > max_letter:
            raise BudgetExceeded(2 * a0(h) + 1, 2 * a0(max_letter) + 1, f"phi({h})")
        with lock:
            # phi^j(00) only uses letters <= j, whose images need powers < j
            while len(powers) <= h:
                powers.append(apply(m, powers[-1]))
            y = powers[h]
        return rotate_right(y, 1) + (h + 1,)

    m = Morphism(rule, "phi", length_rule=lambda c, n: a(c, c + n))
    return m


@lru_cache(maxsize=None)
def phi_reversed(max_letter: int = PHI_MAX_LETTER) -> Morphism:
    return reversed_morphism(phi(max_letter))


@lru_cache(maxsize=16)
def psi(h: int, k: int, budget: int = DEFAULT_BUDGET) -> Word:
    """``phi^(k-h)(h)``: the least overlap-free word starting with ``h`` and ending with ``k``."""
    _check_pair(h, k)
    return iterate(phi(max(PHI_MAX_LETTER, k - 1)), k - h, h, budget)


@lru_cache(maxsize=16)
def _psi0_product(k: int) -> Word:
    return psi_via_product(0, k)


def psi_via_product(h: int, k: int, budget: int = DEFAULT_BUDGET) -> Word:
    """``psi(h, k)`` built from rotated squares of ``psi(0, k-1)``, without ``phi``."""
    _check_pair(h, k)
    if a(h, k) > budget:
        raise BudgetExceeded(a(h, k), budget, f"psi({h},{k})")
    if h == k:
        return Word((k,))
    base = _psi0_product(k - 1)
    out: list[int] = []
    for l in range(h, k):
        block = rotate_right(base, a(l, k - 1))
        out.extend(block)
        out.extend(block)
    out.append(k)
    return Word(out)


# ---------------------------------------------------------------- random access

@dataclass(frozen=True)
class EvalResult:
    letter: int
    k: int  # least k with a(0, k) >= n
    steps: int  # big-integer arithmetic operations and comparisons performed


def w2plus_eval(n: int) -> EvalResult:
    """Letter ``n`` (1-based) of the least overlap-free word, with an operation count.

    Finds the least ``k`` with ``a(0, k) >= n``, then walks down: position
    ``n`` of ``psi(0, k)`` is either its final letter ``k`` or lies in one of
    the rotated squares of ``psi(0, k-1)``, which maps it to a position of
    ``psi(0, k-1)``.
    """
    if n < 1:
        raise ValueError(f"positions start at 1, got {n}")
    steps = 0
    k = 0
    av = [1]
    while True:
        steps += 1  # compare
        if av[k] >= n:
            break
        k += 1
        av.append(2 * k * av[k - 1] + 1)
        steps += 4  # increment, two multiplications, addition
    kn = k
    while k >= 0:
        steps += 2  # loop guard, n == a[k]
        if n == av[k]:
            return EvalResult(k, kn, steps)
        steps += 1  # k - 1 > 0
        if k - 1 > 0:
            block = (n - 1) // (2 * av[k - 1])
            shift = 2 * block * av[k - 2]
            steps += 5
        else:
            shift = 0
        n = (n + shift - 1) % av[k - 1] + 1
        k -= 1
        steps += 5
    raise AssertionError("unreachable: n == a(0, 0) == 1 at k == 0")


def w2plus_letter(n: int) -> int:
    return w2plus_eval(n).letter


def w2plus_stream() -> PrefixStream:
    return fixed_point_stream(phi(), 0)


def w2plus_prefix(n: int) -> Word:
    if n < 0:
        raise ValueError("length must be non-negative")
    return w2plus_stream().take(n)


# ---------------------------------------------------------------- frequencies

@dataclass(frozen=True)
class FrequencyReport:
    letter: int
    length: int
    count: int
    expected: mpmath.mpf  # length / (2^k k! sqrt(e))
    ceil_bound: int  # ceil(n / a(0, k))
    ratio_bound: Fraction  # 2n / a(0, k)
    bound_ok: bool

    @property
    def relative_error(self) -> mpmath.mpf:
        return abs(self.count - self.expected) / self.expected


def letter_frequency_report(k: int, n: int, prefix: Word | None = None) -> FrequencyReport:
    """Count letter ``k`` in the ``n``-prefix and compare with the limiting frequency."""
    if n < 1:
        raise ValueError("n must be positive")
    if prefix is None or len(prefix) < n:
        prefix = w2plus_prefix(n)
    count = tuple.count(prefix[:n] if len(prefix) > n else prefix, k)
    with mpmath.workdps(60):
        expected = mpmath.mpf(n) / (mpmath.mpf((1 << k) * math.factorial(k)) * mpmath.sqrt(mpmath.e))
    size = a0(k)
    ceil_bound = -(-n // size)
    ratio_bound = Fraction(2 * n, size)
    ok = count <= ceil_bound and count <= ratio_bound
    return FrequencyReport(k, n, count, expected, ceil_bound, ratio_bound, ok)


# ---------------------------------------------------------------- symmetries

@dataclass
class CheckResult:
    name: str
    checked: int = 0
    counterexample: str | None = None

    @property
    def passed(self) -> bool:
        return self.counterexample is None

    def record(self, ok: bool, where: str) -> None:
        self.checked += 1
        if not ok and self.counterexample is None:
            self.counterexample = where


@dataclass
class Report:
    label: str
    results: dict[str, CheckResult] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results.values())

    def add(self, *names: str) -> dict[str, CheckResult]:
        for name in names:
            self.results[name] = CheckResult(name)
        return self.results

    def lines(self) -> list[str]:
        out = []
        for r in self.results.values():
            status = "PASS" if r.passed else f"FAIL at {r.counterexample}"
            out.append(f"{r.name:<24} {r.checked:>4} cases  {status}")
        return out


def verify_symmetries(k_max: int) -> Report:
    """Check the structural identities of ``psi`` and ``phi`` for all indices up to ``k_max``."""
    if k_max < 0:
        raise ValueError("k_max must be non-negative")
    if k_max >= PHI_MAX_LETTER:
        # the checks apply phi to phi(k_max), which contains k_max + 1
        raise BudgetExceeded(2 * a0(k_max + 1) + 1, 2 * a0(PHI_MAX_LETTER) + 1,
                             f"symmetry checks up to {k_max}")
    f = phi()
    fr = phi_reversed()
    rep = Report(f"symmetries k_max={k_max}")
    names = [
        "product_formula", "nesting", "shift_is_reversal", "reversal_concatenation",
        "psi_palindrome", "phi_from_rotated_square", "phi_inner_palindrome",
        "phi_reversed_phi_palindrome", "phi_commutes_phi_R", "translate_k", "translate_h_k",
    ]
    r = rep.add(*names)

    for k in range(k_max + 1):
        p0k = psi(0, k)
        r["shift_is_reversal"].record(rotate_right(p0k, 1) == reverse(p0k), f"k={k}")
        r["psi_palindrome"].record(is_palindrome(p0k[:-1]), f"k={k}")
        for h in range(k + 1):
            phk = psi(h, k)
            r["product_formula"].record(psi_via_product(h, k) == phk, f"h={h},k={k}")
            r["reversal_concatenation"].record(
                reverse(psi(k - h, k)) + phk == (k,) + p0k, f"h={h},k={k}")
            for l in range(h, k + 1):
                r["nesting"].record(
                    is_prefix(psi(h, l), phk) and is_suffix(psi(l, k), phk),
                    f"h={h},l={l},k={k}")
            for i in range(k_max - k + 1):
                r["translate_k"].record(
                    psi(h, k + i) == _iterate_word(f, i, phk), f"h={h},k={k},i={i}")
                lhs = psi(h + i, k + i)
                rhs = _iterate_word(fr, i, remove_suffix(phk, (k,))) + (k + i,)
                r["translate_h_k"].record(lhs == rhs, f"h={h},k={k},i={i}")

    for h in range(k_max + 1):
        img = f.image(h)
        p0h = psi(0, h)
        r["phi_from_rotated_square"].record(
            img == rotate_right(p0h, 1) * 2 + (h + 1,) == reverse(p0h) * 2 + (h + 1,), f"h={h}")
        r["phi_inner_palindrome"].record(is_palindrome(img[1:-1]), f"h={h}")
        r["phi_reversed_phi_palindrome"].record(is_palindrome(apply(f, reverse(img))), f"h={h}")
        r["phi_commutes_phi_R"].record(
            apply(f, fr.image(h)) == apply(fr, img), f"h={h}")
    return rep


def _iterate_word(m: Morphism, n: int, w: Word) -> Word:
    for _ in range(n):
        w = apply(m, w)
    return w


# ---------------------------------------------------------------- tables

def table(which: str, k_max: int) -> list[tuple[int, int, int]]:
    """Rows ``(h, k, value)`` of the ``a`` or ``d`` table for ``0 <= h <= k <= k_max``."""
    fn = {"a": a, "d": d}.get(which)
    if fn is None:
        raise ValueError(f"unknown table {which!r}; expected 'a' or 'd'")
    return [(h, k, fn(h, k)) for k in range(k_max + 1) for h in range(k + 1)]


def table_to_csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["h", "k", "value"])
    for h, k, v in rows:
        writer.writerow([h, k, v])
    return buf.getvalue()


def table_from_csv(text: str) -> list[tuple[int, int, int]]:
    reader = csv.DictReader(io.StringIO(text))
    if reader.fieldnames != ["h", "k", "value"]:
        raise ValueError(f"unexpected CSV header {reader.fieldnames}")
    return [(int(r["h"]), int(r["k"]), int(r["value"])) for r in reader]


def table_to_json(which: str, rows) -> str:
    doc = {
        "table": which,
        "entries": [{"h": h, "k": k, "value": str(v)} for h, k, v in rows],
    }
    return json.dumps(doc, indent=2)


def table_from_json(text: str) -> tuple[str, list[tuple[int, int, int]]]:
    doc = json.loads(text)
    rows = [(int(e["h"]), int(e["k"]), int(e["value"])) for e in doc["entries"]]
    return doc["table"], rows
