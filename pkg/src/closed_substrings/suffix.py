"""Suffix array and LCP array construction.

SA by prefix doubling on numpy arrays (O(n log^2 n) worst case, a handful of
vectorised sorts in practice), LCP by Kasai's rank/scan. No sentinel symbol
is appended: a proper prefix sorts before any of its extensions.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import TextLike, as_symbols


@dataclass(frozen=True)
class SuffixStructs:
    """``sa[r]`` is the 1-based start of the ``r``-th smallest suffix; ``lcp[0] == 0``.

    The arrays themselves are 0-indexed int64 numpy arrays (``sa[0]`` is SA[1]).
    """

    sa: np.ndarray
    lcp: np.ndarray

    def __len__(self) -> int:
        return int(self.sa.shape[0])

    def sa_list(self) -> list[int]:
        return self.sa.tolist()

    def lcp_list(self) -> list[int]:
        return self.lcp.tolist()


def _codes(w) -> np.ndarray:
    if isinstance(w, np.ndarray):
        return w.astype(np.int64)
    return np.frombuffer(w, dtype=np.uint8).astype(np.int64)


def suffix_array0(w) -> np.ndarray:
    """0-based suffix array of ``w`` (bytes or an int64 symbol array)."""
    n = len(w)
    if n == 0:
        return np.zeros(0, dtype=np.int64)
    rank = _codes(w)
    sa = np.argsort(rank, kind="stable")
    srt = rank[sa]
    rank = np.empty(n, dtype=np.int64)
    rank[sa] = np.concatenate(([1], 1 + np.cumsum(srt[1:] != srt[:-1])))
    k = 1
    while int(rank.max()) < n:
        second = np.zeros(n, dtype=np.int64)
        second[: n - k] = rank[k:]
        key = rank * (n + 1) + second
        sa = np.argsort(key, kind="stable")
        srt = key[sa]
        rank = np.empty(n, dtype=np.int64)
        rank[sa] = np.concatenate(([1], 1 + np.cumsum(srt[1:] != srt[:-1])))
        k *= 2
    return sa


def kasai_lcp0(w, sa0: np.ndarray) -> list[int]:
    """LCP of adjacent suffixes in ``sa0``; element 0 is 0."""
    if isinstance(w, np.ndarray):
        w = w.tolist()
    n = len(w)
    sa = sa0.tolist()
    rank = [0] * n
    for r, p in enumerate(sa):
        rank[p] = r
    lcp = [0] * n
    h = 0
    for p in range(n):
        r = rank[p]
        if r == 0:
            h = 0
            continue
        q = sa[r - 1]
        while p + h < n and q + h < n and w[p + h] == w[q + h]:
            h += 1
        lcp[r] = h
        if h:
            h -= 1
    return lcp


def build_suffix_structs(text: TextLike) -> SuffixStructs:
    w = as_symbols(text)
    sa0 = suffix_array0(w)
    lcp = np.asarray(kasai_lcp0(w, sa0), dtype=np.int64)
    return SuffixStructs(sa=sa0 + 1, lcp=lcp)
