"""Maximal closed substrings from the MRC array.

A maximal right-closed entry ``(r, b)`` at ``i`` is also maximal left-closed
unless the symbol before it equals the symbol before the second occurrence
of its border, so one comparison per entry decides it.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple

import numpy as np

from .core import McsKind, McsOccurrence, MrcArray, as_symbols


class Census(NamedTuple):
    sm: int
    runs: int
    gm: int
    total: int


def mcs_mask(text, mrc: MrcArray) -> np.ndarray:
    """Boolean mask over the flat entries of ``mrc``: which ones are MCSs."""
    w = as_symbols(text)
    arr = w if isinstance(w, np.ndarray) else np.frombuffer(w, dtype=np.uint8)
    if mrc.n != len(arr):
        raise ValueError(f"MRC array has {mrc.n} lists for a text of length {len(arr)}")
    i = mrc.starts()
    mask = i == 1
    rest = ~mask
    # 0-based: symbol before the start vs symbol before the border's second occurrence
    before = arr[np.maximum(i - 2, 0)]
    other = arr[np.clip(i + mrc.r_lens - mrc.b_lens - 2, 0, None)]
    mask |= rest & (before != other)
    return mask


def compute_mcs(text, mrc: MrcArray) -> list[McsOccurrence]:
    """All MCS occurrences, sorted by start then decreasing length."""
    mask = mcs_mask(text, mrc)
    starts = mrc.starts()[mask].tolist()
    rs = mrc.r_lens[mask].tolist()
    bs = mrc.b_lens[mask].tolist()
    return [McsOccurrence.of(i, r, b) for i, r, b in zip(starts, rs, bs)]


def census(mcs_list: Iterable[McsOccurrence]) -> Census:
    """Counts of singleton, run and gapped MCSs, plus their total."""
    counts = {kind: 0 for kind in McsKind}
    for occ in mcs_list:
        counts[occ.kind] += 1
    sm, runs, gm = counts[McsKind.SINGLETON], counts[McsKind.RUN], counts[McsKind.GAPPED]
    return Census(sm, runs, gm, sm + runs + gm)


def census_of(text, mrc: MrcArray) -> Census:
    """:func:`census` straight from the flat arrays, without building occurrences."""
    mask = mcs_mask(text, mrc)
    r = mrc.r_lens[mask]
    b = mrc.b_lens[mask]
    sm = int(np.count_nonzero(r == 1))
    gm = int(np.count_nonzero((r > 1) & (r > 2 * b)))
    total = int(len(r))
    return Census(sm, total - sm - gm, gm, total)
