"""Fibonacci, Tribonacci and Thue-Morse words, and the closed-form MCS census of Fibonacci words.

Word lengths follow ``F_0 = F_1 = 1``, so ``|f_n| = F_n``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

DEFAULT_CAP = 1 << 26

PHI = (1 + math.sqrt(5)) / 2
# M(f_n) / F_n tends to 1 + 1/phi^2
MCS_DENSITY = 1 + 1 / PHI**2


class WordTooLong(ValueError):
    """The requested word would exceed the length cap."""


def _check(n: int, length: int, cap: int) -> None:
    if n < 0:
        raise ValueError("index must be non-negative")
    if length > cap:
        raise WordTooLong(f"word {n} has {length} symbols, cap is {cap}")


@lru_cache(maxsize=None)
def fib_number(n: int) -> int:
    """``F_n`` with ``F_0 = F_1 = 1``."""
    if n < 0:
        raise ValueError("index must be non-negative")
    a, b = 1, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def fib_numbers(upto: int) -> list[int]:
    return [fib_number(k) for k in range(upto + 1)]


def fibonacci_word(n: int, cap: int = DEFAULT_CAP) -> bytes:
    """``f_0 = 0``, ``f_1 = 1``, ``f_n = f_{n-1} f_{n-2}``."""
    _check(n, fib_number(n) if n >= 0 else 0, cap)
    if n == 0:
        return b"0"
    prev, cur = b"0", b"1"
    for _ in range(n - 1):
        prev, cur = cur, cur + prev
    return cur


def tribonacci_word(n: int, cap: int = DEFAULT_CAP) -> bytes:
    """``t_0 = 1``, ``t_1 = 12``, ``t_2 = 1213``, ``t_n = t_{n-1} t_{n-2} t_{n-3}``."""
    seeds = [b"1", b"12", b"1213"]
    if n < 0:
        raise ValueError("index must be non-negative")
    lengths = [1, 2, 4]
    while len(lengths) <= n:
        lengths.append(lengths[-1] + lengths[-2] + lengths[-3])
    _check(n, lengths[n], cap)
    if n < 3:
        return seeds[n]
    a, b, c = seeds
    for _ in range(n - 2):
        a, b, c = b, c, c + b + a
    return c


def thue_morse_word(n: int, cap: int = DEFAULT_CAP) -> bytes:
    """``mu^n(0)`` for the morphism ``0 -> 01``, ``1 -> 10``."""
    _check(n, 1 << n if n >= 0 else 0, cap)
    word = b"0"
    flip = bytes.maketrans(b"01", b"10")
    for _ in range(n):
        word += word.translate(flip)
    return word


@dataclass(frozen=True)
class FibCensus:
    n: int
    F_n: int
    sm: int
    runs: int
    gm: int
    m: int

    def counts(self) -> tuple[int, int, int, int]:
        return self.sm, self.runs, self.gm, self.m


def fib_census_formula(n: int) -> FibCensus:
    """Singleton, run, gapped and total MCS counts of ``f_n`` by closed form (``n >= 5``)."""
    if n < 5:
        raise ValueError("n must be ≥ 5")
    F = fib_number
    odd = n % 2 == 1
    sm = F(n - 2) + F(n - 4) + (2 if odd else 0)
    runs = 2 * F(n - 2) - 3
    gm = F(n - 5) + (0 if odd else 1)
    m = F(n) + F(n - 2) - (1 if odd else 2)
    if sm + runs + gm != m:
        raise AssertionError(f"census parts do not add up for n={n}")
    return FibCensus(n, F(n), sm, runs, gm, m)
