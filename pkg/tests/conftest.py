import itertools

import pytest

from closed_substrings.core import MrcArray

MISSISSIPPI = b"mississippi"

# reference MRC array of mississippi: i -> [(r, b), ...]
MISSISSIPPI_MRC = {
    1: [(1, 0)],
    2: [(7, 4), (1, 0)],
    3: [(6, 3), (2, 1)],
    4: [(5, 2), (3, 1), (1, 0)],
    5: [(4, 1), (1, 0)],
    6: [(2, 1)],
    7: [(1, 0)],
    8: [(4, 1), (1, 0)],
    9: [(2, 1)],
    10: [(1, 0)],
    11: [(1, 0)],
}

# reference compact representation of mississippi: (triple, is_mcs)
MISSISSIPPI_TRIPLES = [
    ((1, 1, 1), True), ((2, 4, 7), True), ((2, 1, 1), True), ((3, 5, 6), False),
    ((3, 1, 2), True), ((4, 5, 5), False), ((4, 3, 3), True), ((4, 1, 1), False),
    ((5, 4, 4), False), ((5, 1, 1), True), ((6, 1, 2), True), ((7, 1, 1), False),
    ((8, 4, 4), True), ((8, 1, 1), True), ((9, 1, 2), True), ((10, 1, 1), False),
    ((11, 1, 1), True),
]


def mississippi_mrc() -> MrcArray:
    return MrcArray(MISSISSIPPI_MRC[i] for i in range(1, 12))


def all_strings(alphabet: bytes, max_len: int, min_len: int = 1):
    for n in range(min_len, max_len + 1):
        for t in itertools.product(alphabet, repeat=n):
            yield bytes(t)


def naive_suffix_structs(w: bytes) -> tuple[list[int], list[int]]:
    sa = sorted(range(1, len(w) + 1), key=lambda p: w[p - 1:])
    lcp = [0] * len(w)
    for r in range(1, len(w)):
        a, b = w[sa[r - 1] - 1:], w[sa[r] - 1:]
        h = 0
        while h < min(len(a), len(b)) and a[h] == b[h]:
            h += 1
        lcp[r] = h
    return sa, lcp


@pytest.fixture
def mississippi() -> bytes:
    return MISSISSIPPI
