"""Exhaustive search for the largest number of MCSs in a string of given length and alphabet.

The MCS count does not change when letters are renamed, so only canonical
strings are visited: those whose letters first appear in the order a, b, c,
d. Ties go to the lexicographically least witness.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from typing import Iterator

from .mcs import mcs_mask
from .mrc_partition import compute_mrc_partition

LETTERS = b"abcd"
DEFAULT_BUDGET = {1: 1 << 20, 2: 16, 3: 12, 4: 10}


class BudgetExceeded(ValueError):
    """``n`` is larger than the configured budget for this alphabet size."""


def mcs_count(text: bytes) -> int:
    return int(mcs_mask(text, compute_mrc_partition(text)).sum())


def canonical_strings(n: int, sigma: int, prefix: bytes = b"") -> Iterator[bytes]:
    """Canonical strings of length ``n`` over the first ``sigma`` letters, lexicographically.

    ``prefix`` must itself be canonical; only its extensions are produced.
    """
    if not 1 <= sigma <= len(LETTERS):
        raise ValueError(f"sigma must be in 1..{len(LETTERS)}")
    if len(prefix) > n:
        return
    codes = [LETTERS.index(c) for c in prefix]
    used = max(codes, default=-1) + 1
    word = codes + [0] * (n - len(codes))

    def rec(k: int, used: int) -> Iterator[bytes]:
        if k == n:
            yield bytes(LETTERS[c] for c in word)
            return
        for c in range(min(used + 1, sigma)):
            word[k] = c
            yield from rec(k + 1, max(used, c + 1))

    if n == 0:
        yield b""
        return
    yield from rec(len(codes), used)


def _best(items: Iterator[bytes]) -> tuple[int, bytes]:
    best, witness = -1, b""
    for w in items:
        c = mcs_count(w)
        # strictly greater keeps the first (least) witness in lexicographic order
        if c > best:
            best, witness = c, w
    return best, witness


def _best_with_prefix(args: tuple[int, int, bytes]) -> tuple[int, bytes]:
    n, sigma, prefix = args
    return _best(canonical_strings(n, sigma, prefix))


def max_mcs(
    n: int,
    sigma: int,
    workers: int = 1,
    budget: dict[int, int] | None = None,
) -> tuple[int, bytes]:
    """``(max_count, witness)`` over all strings of length ``n`` on ``sigma`` letters.

    With ``workers > 1`` the canonical prefixes of a few symbols are farmed
    out to processes; results are combined by count and then witness, so the
    answer does not depend on scheduling.
    """
    if not 1 <= sigma <= len(LETTERS):
        raise ValueError(f"sigma must be in 1..{len(LETTERS)}")
    if n < 1:
        raise ValueError("n must be at least 1")
    cap = (budget or DEFAULT_BUDGET).get(sigma, 0)
    if n > cap:
        raise BudgetExceeded(f"n={n} exceeds the budget n <= {cap} for sigma={sigma}")
    if workers <= 1 or n < 6:
        return _best(canonical_strings(n, sigma))

    depth = min(n, 4)
    prefixes = list(canonical_strings(depth, sigma))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(_best_with_prefix, [(n, sigma, p) for p in prefixes]))
    best = max(c for c, _ in results)
    return best, min(w for c, w in results if c == best)


def csv_row(n: int, sigma: int, count: int, witness: bytes) -> str:
    return f"{n},{sigma},{count},{witness.decode('ascii')}"
