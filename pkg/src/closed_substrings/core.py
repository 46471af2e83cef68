"""Shared domain types.

Texts are plain ``bytes`` (one byte per symbol). Every position that leaves
this package is 1-based: ``w[i..j]`` is ``text[i - 1:j]`` and has length
``j - i + 1``.
"""

from __future__ import annotations

import enum
import math
from typing import Iterable, Iterator, NamedTuple, Sequence, Union

import numpy as np

TextLike = Union[bytes, bytearray, memoryview, str]


def as_text(text: TextLike) -> bytes:
    """Coerce to ``bytes``; ``str`` input is encoded as latin-1 when possible, else UTF-8."""
    if isinstance(text, bytes):
        return text
    if isinstance(text, (bytearray, memoryview)):
        return bytes(text)
    if isinstance(text, str):
        try:
            return text.encode("latin-1")
        except UnicodeEncodeError:
            return text.encode("utf-8")
    raise TypeError(f"expected bytes or str, got {type(text).__name__}")


def as_symbols(text) -> Union[bytes, np.ndarray]:
    """Like :func:`as_text`, but a 1-D sequence of non-negative ints passes through as int64.

    Integer symbols let the engines run on alphabets larger than 256.
    """
    if isinstance(text, (bytes, bytearray, memoryview, str)):
        return as_text(text)
    arr = np.asarray(text)
    if arr.size == 0:
        return b""
    if arr.ndim != 1 or arr.dtype.kind not in "iu":
        raise TypeError("expected bytes, str or a 1-D integer sequence")
    if arr.min() < 0:
        raise ValueError("integer symbols must be non-negative")
    return arr.astype(np.int64)


def alphabet_size(text: bytes) -> int:
    return len(set(text.tolist() if isinstance(text, np.ndarray) else text))


class MrcEntry(NamedTuple):
    """A maximal right-closed substring: its length and its longest border length."""

    r_len: int
    b_len: int


class ClosedTriple(NamedTuple):
    """``(i, p_len, r_len)``: every ``w[i..i+l-1]`` with ``p_len <= l <= r_len`` is closed."""

    i: int
    p_len: int
    r_len: int


class McsKind(str, enum.Enum):
    SINGLETON = "singleton"
    RUN = "run"
    GAPPED = "gapped"

    def __str__(self) -> str:
        return self.value


def classify(length: int, border_len: int) -> McsKind:
    if length == 1:
        return McsKind.SINGLETON
    if length > 2 * border_len:
        return McsKind.GAPPED
    return McsKind.RUN


class McsOccurrence(NamedTuple):
    start: int
    length: int
    border_len: int
    kind: McsKind

    @classmethod
    def of(cls, start: int, length: int, border_len: int) -> "McsOccurrence":
        return cls(start, length, border_len, classify(length, border_len))


class MrcArray:
    """Per-start lists of :class:`MrcEntry`, each in strictly decreasing ``r_len``.

    ``mrc[i]`` is the list for the 1-based start ``i``. Storage is flat
    (CSR style): entries of start ``i`` occupy ``offsets[i-1]:offsets[i]`` of
    the ``r_len`` / ``b_len`` arrays. Instances are immutable.
    """

    __slots__ = ("_offsets", "_r", "_b")

    def __init__(self, lists: Iterable[Iterable[tuple[int, int]]]):
        counts = []
        rs: list[int] = []
        bs: list[int] = []
        for entries in lists:
            entries = list(entries)
            counts.append(len(entries))
            for r, b in entries:
                rs.append(int(r))
                bs.append(int(b))
        offsets = np.zeros(len(counts) + 1, dtype=np.int64)
        np.cumsum(counts, out=offsets[1:])
        self._set(offsets, np.asarray(rs, dtype=np.int64), np.asarray(bs, dtype=np.int64))

    def _set(self, offsets: np.ndarray, r: np.ndarray, b: np.ndarray) -> None:
        for arr in (offsets, r, b):
            arr.flags.writeable = False
        self._offsets, self._r, self._b = offsets, r, b

    @classmethod
    def from_flat(cls, n: int, starts, r_lens, b_lens) -> "MrcArray":
        """Build from parallel sequences of 1-based starts, lengths and border lengths.

        Entries may come in any order; they are grouped by start and sorted by
        decreasing length.
        """
        starts = np.asarray(starts, dtype=np.int64)
        r = np.asarray(r_lens, dtype=np.int64)
        b = np.asarray(b_lens, dtype=np.int64)
        order = np.lexsort((-r, starts))
        counts = np.bincount(starts - 1, minlength=n) if len(starts) else np.zeros(n, dtype=np.int64)
        if len(counts) != n:
            raise ValueError(f"start index outside 1..{n}")
        offsets = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(counts, out=offsets[1:])
        obj = cls.__new__(cls)
        obj._set(offsets, r[order], b[order])
        return obj

    @property
    def n(self) -> int:
        return len(self._offsets) - 1

    @property
    def offsets(self) -> np.ndarray:
        return self._offsets

    @property
    def r_lens(self) -> np.ndarray:
        return self._r

    @property
    def b_lens(self) -> np.ndarray:
        return self._b

    def starts(self) -> np.ndarray:
        """1-based start of every flat entry."""
        return np.repeat(np.arange(1, self.n + 1, dtype=np.int64), np.diff(self._offsets))

    @property
    def lists(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Plain ``(r_len, b_len)`` tuples per start."""
        pairs = list(zip(self._r.tolist(), self._b.tolist()))
        off = self._offsets.tolist()
        return tuple(tuple(pairs[off[i]:off[i + 1]]) for i in range(self.n))

    def __len__(self) -> int:
        return self.n

    def __getitem__(self, i: int) -> tuple[MrcEntry, ...]:
        if not 1 <= i <= self.n:
            raise IndexError(f"start index {i} outside 1..{self.n}")
        lo, hi = int(self._offsets[i - 1]), int(self._offsets[i])
        return tuple(MrcEntry(r, b) for r, b in zip(self._r[lo:hi].tolist(), self._b[lo:hi].tolist()))

    def __iter__(self) -> Iterator[tuple[tuple[int, int], ...]]:
        return iter(self.lists)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, MrcArray):
            return (
                np.array_equal(self._offsets, other._offsets)
                and np.array_equal(self._r, other._r)
                and np.array_equal(self._b, other._b)
            )
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._offsets.tobytes(), self._r.tobytes(), self._b.tobytes()))

    def __repr__(self) -> str:
        body = ", ".join(f"{i}: {list(es)}" for i, es in enumerate(self.lists, 1))
        return f"MrcArray({{{body}}})"

    def entries(self) -> Iterator[tuple[int, int, int]]:
        """Yield ``(i, r_len, b_len)`` in canonical order."""
        return zip(self.starts().tolist(), self._r.tolist(), self._b.tolist())

    def total_entries(self) -> int:
        return len(self._r)


def entry_bound(n: int, c: float = 4.0) -> float:
    """``c * n * log2(n + 1)``, the budget every MRC array must respect."""
    return c * n * math.log2(n + 1)


def validate_mrc(text: TextLike, mrc: MrcArray | Sequence[Sequence[tuple[int, int]]]) -> list[str]:
    """Return a description of every invariant ``mrc`` violates for ``text``.

    Checks list count, per-entry ranges, the border equality of each entry,
    strictly decreasing order, the unary-block shape of the last entry and
    the global ``4 n log2(n+1)`` size budget. An empty result means valid.
    """
    w = as_text(text)
    n = len(w)
    lists = mrc.lists if isinstance(mrc, MrcArray) else [list(es) for es in mrc]
    problems: list[str] = []
    if len(lists) != n:
        problems.append(f"expected {n} lists, got {len(lists)}")
        return problems

    total = 0
    for i, entries in enumerate(lists, 1):
        total += len(entries)
        if not entries:
            problems.append(f"list {i} is empty")
            continue
        for r, b in entries:
            tag = f"entry ({r},{b}) at {i}"
            if r < 1 or not 0 <= b < r:
                problems.append(f"{tag}: need 1 <= r_len and 0 <= b_len < r_len")
                continue
            if (b == 0) != (r == 1):
                problems.append(f"{tag}: b_len = 0 iff r_len = 1")
            if i + r - 1 > n:
                problems.append(f"{tag}: runs past end of text (n={n})")
                continue
            if w[i - 1:i - 1 + b] != w[i + r - b - 1:i + r - 1]:
                problems.append(
                    f"{tag}: w[{i}..{i + r - 1}] border mismatch, b_len={b} but prefix and suffix differ"
                )
        for (r1, b1), (r2, b2) in zip(entries, entries[1:]):
            if not (r1 > r2 and b1 > b2):
                problems.append(f"list {i}: ({r1},{b1}) then ({r2},{b2}) is not strictly decreasing")
        r, b = entries[-1]
        if 1 <= r and i + r - 1 <= n:
            block = w[i - 1:i - 1 + r]
            if b != r - 1 or block.count(block[:1]) != r:
                problems.append(f"list {i}: last entry ({r},{b}) is not a unary block (m, m-1)")
            elif i + r - 1 < n and w[i + r - 1] == block[0]:
                problems.append(f"list {i}: last entry ({r},{b}) is not a maximal unary block")
    if n and total > entry_bound(n):
        problems.append(f"{total} entries exceed 4 n log2(n+1) = {entry_bound(n):.1f}")
    return problems
