"""Compact representation of every closed substring occurrence.

At a fixed start, the closed lengths form a union of disjoint intervals, one
per MRC entry. Taking the entries shortest first, the interval of entry
``(r_j, b_j)`` begins at ``r_j - b_j + b_{j-1} + 1`` (and at 1 for the
shortest entry) and ends at ``r_j``.
"""

from __future__ import annotations

from typing import Iterable, Iterator

import numpy as np

from .core import ClosedTriple, MrcArray


class StructuralError(ValueError):
    """The MRC array yields an interval outside ``1..r_len``, so it is corrupt."""


def compact_lengths(mrc: MrcArray) -> np.ndarray:
    """``p_len`` for every flat entry of ``mrc``, aligned with ``mrc.r_lens``."""
    r, b = mrc.r_lens, mrc.b_lens
    p = np.ones(len(r), dtype=np.int64)
    if len(r) > 1:
        # entries run longest first, so the next shorter entry is the next slot
        starts = mrc.starts()
        inner = starts[:-1] == starts[1:]
        p[:-1] = np.where(inner, r[:-1] - b[:-1] + b[1:] + 1, 1)
    bad = np.flatnonzero((p < 1) | (p > r))
    if len(bad):
        j = int(bad[0])
        raise StructuralError(
            f"entry ({int(r[j])},{int(b[j])}) at {int(mrc.starts()[j])} gives p_len={int(p[j])}"
        )
    return p


def compact_representation(mrc: MrcArray) -> list[ClosedTriple]:
    """Triples ``(i, p_len, r_len)``, one per MRC entry, ordered by ``i`` then decreasing ``r_len``."""
    p = compact_lengths(mrc)
    return [
        ClosedTriple(i, pl, rl)
        for i, pl, rl in zip(mrc.starts().tolist(), p.tolist(), mrc.r_lens.tolist())
    ]


def enumerate_closed(text, triples: Iterable[ClosedTriple]) -> Iterator[tuple[int, int]]:
    """Lazily yield every closed occurrence ``(start, length)``.

    Within a triple lengths ascend; triples are visited in the given order.
    ``text`` is accepted for symmetry with the other entry points and to
    reject triples that run past its end.
    """
    n = len(text)
    for i, p_len, r_len in triples:
        if i + r_len - 1 > n:
            raise StructuralError(f"triple ({i},{p_len},{r_len}) runs past the end (n={n})")
        for length in range(p_len, r_len + 1):
            yield i, length


def count_closed(triples: Iterable[ClosedTriple]) -> int:
    """Number of closed occurrences encoded by ``triples``."""
    return sum(r_len - p_len + 1 for _, p_len, r_len in triples)


def closed_lengths_by_start(n: int, triples: Iterable[ClosedTriple]) -> list[set[int]]:
    """Closed lengths per start (list index ``i - 1``), expanded from the triples."""
    out: list[set[int]] = [set() for _ in range(n)]
    for i, p_len, r_len in triples:
        out[i - 1].update(range(p_len, r_len + 1))
    return out
