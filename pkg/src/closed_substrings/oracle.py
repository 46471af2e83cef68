"""Brute-force reference implementations used as ground truth in tests.

Everything here follows the definitions directly and is cubic (or worse) in
the text length. Keep inputs short.
"""

from __future__ import annotations

from .core import McsOccurrence, MrcArray, TextLike, as_text


def border_array(u: TextLike) -> list[int]:
    """``beta[l-1]`` is the longest border length of ``u[1..l]`` (failure function)."""
    u = as_text(u)
    beta = [0] * len(u)
    for pos in range(1, len(u)):
        b = beta[pos - 1]
        while b and u[pos] != u[b]:
            b = beta[b - 1]
        if u[pos] == u[b]:
            b += 1
        beta[pos] = b
    return beta


def longest_border(u: TextLike) -> int:
    u = as_text(u)
    if not u:
        raise ValueError("longest_border needs a non-empty string")
    return border_array(u)[-1]


def is_closed(u: TextLike) -> bool:
    """True iff ``|u| = 1`` or the (non-empty) longest border of ``u`` occurs only at its ends."""
    u = as_text(u)
    if not u:
        raise ValueError("closedness is only defined for non-empty strings")
    if len(u) == 1:
        return True
    b = longest_border(u)
    if b == 0:
        return False
    return u.find(u[:b], 1) == len(u) - b


def border_occurrences(u: TextLike) -> list[int]:
    """1-based start positions of every occurrence of the longest border inside ``u``."""
    u = as_text(u)
    b = longest_border(u)
    if b == 0:
        return []
    border = u[:b]
    return [p + 1 for p in range(len(u) - b + 1) if u.startswith(border, p)]


def _closed_table(w: bytes) -> list[list[bool]]:
    # closed[i][l] for 0-based start i and length l (index 0 unused)
    n = len(w)
    table = []
    for i in range(n):
        row = [False] * (n - i + 1)
        for length in range(1, n - i + 1):
            row[length] = is_closed(w[i:i + length])
        table.append(row)
    return table


def brute_mrc(text: TextLike) -> MrcArray:
    """MRC array straight from the definition of maximal right-closed occurrences."""
    w = as_text(text)
    n = len(w)
    closed = _closed_table(w)
    lists = []
    for i in range(n):
        entries = []
        for length in range(n - i, 0, -1):
            if not closed[i][length]:
                continue
            if i + length < n and closed[i][length + 1]:
                continue
            entries.append((length, longest_border(w[i:i + length])))
        lists.append(entries)
    return MrcArray(lists)


def brute_mcs(text: TextLike) -> list[McsOccurrence]:
    """All closed occurrences extendible neither left nor right, sorted by (start, -length)."""
    w = as_text(text)
    n = len(w)
    closed = _closed_table(w)
    found = []
    for i in range(n):
        for length in range(n - i, 0, -1):
            if not closed[i][length]:
                continue
            if i + length < n and closed[i][length + 1]:
                continue
            if i > 0 and closed[i - 1][length + 1]:
                continue
            found.append(McsOccurrence.of(i + 1, length, longest_border(w[i:i + length])))
    return found


def brute_closed_lengths(text: TextLike) -> list[set[int]]:
    """For each 1-based start (list index ``i - 1``), the set of lengths giving a closed substring."""
    w = as_text(text)
    return [
        {length for length in range(1, len(row)) if row[length]}
        for row in _closed_table(w)
    ]
