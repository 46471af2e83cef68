"""MRC array from the suffix array and LCP array.

The LCP array is scanned left to right with a stack of position sets. On
every drop in LCP the sets sharing the current maximum are merged, and each
position whose successor changes during the merge witnesses one maximal
right-closed substring whose border is the shared prefix.
"""

from __future__ import annotations

from bisect import bisect_left
from itertools import chain
from typing import Iterable, Sequence

import numpy as np
from sortedcontainers import SortedList

from .core import MrcArray, TextLike, as_symbols
from .suffix import SuffixStructs, build_suffix_structs

# merging everything by a linear pass is cheaper than point inserts once the
# smaller parts reach this fraction of the largest one
_LINEAR_MERGE_RATIO = 8
# plain lists above this size become SortedLists before taking point inserts
_PROMOTE_AT = 2048


class OverlapError(ValueError):
    """Raised when sets handed to :func:`union_with_changelist` share a position."""


class PosSet:
    """An ordered set of positions with an attached LCP value.

    Small sets are plain sorted lists; sets that keep absorbing a few
    positions at a time are promoted to a ``SortedList`` so each insert and
    neighbour query stays logarithmic.
    """

    __slots__ = ("keys", "lcp")

    def __init__(self, positions: Iterable[int] = (), lcp: int = 0):
        keys = positions if isinstance(positions, SortedList) else sorted(positions)
        self.keys: list[int] | SortedList = keys
        self.lcp = lcp

    @classmethod
    def _wrap(cls, keys, lcp: int) -> "PosSet":
        # keys already sorted and owned by the new set
        obj = cls.__new__(cls)
        obj.keys = keys
        obj.lcp = lcp
        return obj

    def __len__(self) -> int:
        return len(self.keys)

    def __iter__(self):
        return iter(self.keys)

    def __contains__(self, x: int) -> bool:
        i = self._bisect(x)
        return i < len(self.keys) and self.keys[i] == x

    def __repr__(self) -> str:
        return f"PosSet({list(self.keys)}, lcp={self.lcp})"

    def _bisect(self, x: int) -> int:
        if isinstance(self.keys, SortedList):
            return self.keys.bisect_left(x)
        return bisect_left(self.keys, x)

    def insert(self, x: int) -> None:
        if x in self:
            raise OverlapError(f"position {x} already present")
        if isinstance(self.keys, SortedList):
            self.keys.add(x)
        else:
            self.keys.insert(self._bisect(x), x)

    def successor(self, x: int) -> int | None:
        """Smallest member strictly greater than ``x``."""
        i = self._bisect(x + 1)
        return self.keys[i] if i < len(self.keys) else None

    def predecessor(self, x: int) -> int | None:
        """Largest member strictly smaller than ``x``."""
        i = self._bisect(x)
        return self.keys[i - 1] if i else None


def _merge(parts: list) -> tuple[list[int] | SortedList, list[tuple[int, int]]]:
    """Merge raw sorted containers (consumed) and return ``(keys, change list)``.

    A bare ``int`` stands for a one-position set.
    """
    parts = [[p] if type(p) is int else p for p in parts]
    if len(parts) == 2:
        big, little = parts
        if len(big) < len(little):
            big, little = little, big
        if len(little) == 1:
            # the common case: one new position joins an existing set
            x = little[0]
            if not isinstance(big, SortedList) and len(big) >= _PROMOTE_AT:
                big = SortedList(big)
            if isinstance(big, SortedList):
                i = big.bisect_left(x)
                if i < len(big) and big[i] == x:
                    raise OverlapError(f"position {x} occurs in two parts")
                big.add(x)
            else:
                i = bisect_left(big, x)
                if i < len(big) and big[i] == x:
                    raise OverlapError(f"position {x} occurs in two parts")
                big.insert(i, x)
            changes = []
            if i:
                changes.append((big[i - 1], x))
            if i + 1 < len(big):
                changes.append((x, big[i + 1]))
            return big, changes

    base_at = max(range(len(parts)), key=lambda t: len(parts[t]))
    base = parts[base_at]
    owner: dict[int, int] = {}
    small_total = 0
    for t, part in enumerate(parts):
        if t != base_at:
            small_total += len(part)
            for x in part:
                owner[x] = t
    if len(owner) != small_total:
        raise OverlapError("parts overlap")
    total = len(base) + small_total

    changes: list[tuple[int, int]] = []
    if small_total * _LINEAR_MERGE_RATIO >= len(base) or (
        not isinstance(base, SortedList) and total < _PROMOTE_AT
    ):
        keys = sorted(chain(base, owner))
        prev_x = keys[0]
        prev_t = owner.get(prev_x, -1)
        for x in keys[1:]:
            t = owner.get(x, -1)
            if x == prev_x:
                raise OverlapError(f"position {x} occurs in two parts")
            if t != prev_t:
                changes.append((prev_x, x))
            prev_x, prev_t = x, t
        return keys, changes

    keys = base if isinstance(base, SortedList) else SortedList(base)
    keys.update(owner)
    if len(keys) != total:
        raise OverlapError("parts overlap")
    last = total - 1
    for x in sorted(owner):
        t = owner[x]
        i = keys.bisect_left(x)
        if i < last:
            y = keys[i + 1]
            if owner.get(y, -1) != t:
                changes.append((x, y))
        if i:
            p = keys[i - 1]
            # pairs with two inserted endpoints are reported from the left one
            if p not in owner:
                changes.append((p, x))
    changes.sort()
    return keys, changes


def union_with_changelist(parts: Sequence[PosSet]) -> tuple[PosSet, list[tuple[int, int]]]:
    """Merge disjoint sets, returning the merged set and its change list.

    The change list holds every ``(x, y)`` where ``y`` is the successor of
    ``x`` in the merged set but was not its successor inside ``x``'s own part
    (a missing successor counts as +inf). These are exactly the adjacent
    pairs of the merged order whose members came from different parts.

    The largest part absorbs the others, so the cost is proportional to the
    smaller parts (times a log factor). The inputs are consumed. The merged
    set carries the smallest LCP value among the parts.
    """
    if not parts:
        raise ValueError("need at least one set")
    lcp = min(p.lcp for p in parts)
    if len(parts) == 1:
        return PosSet._wrap(parts[0].keys, lcp), []
    keys, changes = _merge([p.keys for p in parts])
    return PosSet._wrap(keys, lcp), changes


def singleton_starts(text: TextLike) -> np.ndarray:
    """1-based ``i`` with ``i = n`` or ``w[i] != w[i+1]``: where ``(1, 0)`` belongs."""
    w = as_symbols(text)
    arr = w if isinstance(w, np.ndarray) else np.frombuffer(w, dtype=np.uint8)
    if not len(arr):
        return np.zeros(0, dtype=np.int64)
    mask = np.append(arr[:-1] != arr[1:], True)
    return np.flatnonzero(mask).astype(np.int64) + 1


def add_singleton_mrc(text: TextLike, mrc: MrcArray) -> MrcArray:
    """Return ``mrc`` with ``(1, 0)`` added at every ``i`` with ``i = n`` or ``w[i] != w[i+1]``."""
    w = as_symbols(text)
    if mrc.n != len(w):
        raise ValueError(f"MRC array has {mrc.n} lists for a text of length {len(w)}")
    ones = singleton_starts(w)
    return MrcArray.from_flat(
        len(w),
        np.concatenate((mrc.starts(), ones)),
        np.concatenate((mrc.r_lens, np.ones(len(ones), dtype=np.int64))),
        np.concatenate((mrc.b_lens, np.zeros(len(ones), dtype=np.int64))),
    )


def assemble(text, starts, r_lens, b_lens, discovery: str) -> tuple[MrcArray, int]:
    """Add the singletons of ``text`` to raw engine output and build the array.

    ``discovery`` says in which order the engine finds the entries of one
    start, ``"decreasing"`` or ``"increasing"`` length, with singletons
    counted last or first accordingly. Returns the array and the number of
    starts whose entries broke that order.
    """
    if discovery not in ("decreasing", "increasing"):
        raise ValueError(f"unknown discovery order {discovery!r}")
    ones = singleton_starts(text)
    s = [np.asarray(starts, dtype=np.int64), ones]
    r = [np.asarray(r_lens, dtype=np.int64), np.ones(len(ones), dtype=np.int64)]
    b = [np.asarray(b_lens, dtype=np.int64), np.zeros(len(ones), dtype=np.int64)]
    if discovery == "increasing":
        s.reverse()
        r.reverse()
        b.reverse()
    s, r, b = np.concatenate(s), np.concatenate(r), np.concatenate(b)
    mrc = MrcArray.from_flat(len(text), s, r, b)
    order = np.argsort(s, kind="stable")
    s, r = s[order], r[order]
    same = s[1:] == s[:-1]
    step = r[1:] - r[:-1]
    bad = same & (step >= 0 if discovery == "decreasing" else step <= 0)
    return mrc, int(len(np.unique(s[1:][bad])))


def compute_mrc_salcp(
    text: TextLike,
    ss: SuffixStructs | None = None,
    stats: dict | None = None,
) -> MrcArray:
    """MRC array of ``text`` via the SA/LCP stack scan.

    ``ss`` is built when omitted. When ``stats`` is a dict it receives
    ``pushes``, ``pops``, ``stack_ops``, ``unions`` and ``sorted_fixups``
    (starts whose entries were not discovered longest first).
    """
    w = as_symbols(text)
    n = len(w)
    if ss is None:
        ss = build_suffix_structs(w)
    if len(ss) != n:
        raise ValueError("suffix structures were built for a different text")
    sa = ss.sa_list()
    lcp = ss.lcp_list()
    xs: list[int] = []
    rs: list[int] = []
    bs: list[int] = []

    # one-position sets are plain ints; tags never decrease towards the top
    # and the bottom tag is always 0
    sets: list = []
    tags: list[int] = []
    pops = unions = 0
    i = 0
    while sets or i < n:
        while i < n and (not tags or lcp[i] >= tags[-1]):
            sets.append(sa[i])
            tags.append(lcp[i])
            i += 1
        lcp_max = tags[-1]
        if lcp_max == 0:
            pops += len(sets)
            sets.clear()
            tags.clear()
            continue
        j = len(tags) - 1
        while tags[j - 1] == lcp_max:
            j -= 1
        # the lcp_max block plus the set just below it
        previous = tags[j - 1]
        popped = sets[j - 1:]
        del sets[j - 1:]
        del tags[j - 1:]
        pops += len(popped)
        merged, changes = _merge(popped)
        unions += 1
        for x, y in changes:
            xs.append(x)
            rs.append(y + lcp_max - x)
            bs.append(lcp_max)
        sets.append(merged)
        tags.append(previous)

    mrc, fixups = assemble(w, xs, rs, bs, "decreasing")
    if stats is not None:
        pushes = n + unions
        stats.update(
            pushes=pushes,
            pops=pops,
            stack_ops=pushes + pops,
            unions=unions,
            sorted_fixups=fixups,
        )
    return mrc
