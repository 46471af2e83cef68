import itertools
import random

import pytest

from closed_substrings.oracle import brute_mcs
from closed_substrings.search import (
    BudgetExceeded,
    canonical_strings,
    csv_row,
    max_mcs,
    mcs_count,
)


def test_examples():
    assert max_mcs(1, 2) == (1, b"a")
    assert max_mcs(2, 2) == (2, b"ab")
    count, witness = max_mcs(8, 2)
    assert len(witness) == 8 and len(brute_mcs(witness)) == count


def test_canonical_strings():
    assert list(canonical_strings(3, 2)) == [b"aaa", b"aab", b"aba", b"abb"]
    assert list(canonical_strings(3, 3))[-1] == b"abc"
    # restricted growth strings with at most 4 letters: sum of Stirling numbers S(8, k), k <= 4
    assert sum(1 for _ in canonical_strings(8, 4)) == 1 + 127 + 966 + 1701
    assert list(canonical_strings(4, 2, prefix=b"ab")) == [b"abaa", b"abab", b"abba", b"abbb"]


def test_matches_full_enumeration():
    for n in range(1, 8):
        for sigma in (1, 2, 3):
            best = max(len(brute_mcs(bytes(t))) for t in itertools.product(b"abc"[:sigma], repeat=n))
            assert max_mcs(n, sigma)[0] == best


def test_tie_break_least_witness():
    n, sigma = 6, 3
    count, witness = max_mcs(n, sigma)
    winners = [w for w in canonical_strings(n, sigma) if mcs_count(w) == count]
    assert witness == min(winners)


def test_rename_invariance():
    rng = random.Random(8)
    _, witness = max_mcs(9, 3)
    base = len(brute_mcs(witness))
    for _ in range(100):
        perm = rng.sample(b"abcd", 4)
        renamed = bytes(perm[b"abcd".index(c)] for c in witness)
        assert len(brute_mcs(renamed)) == base


def test_parallel_is_deterministic():
    assert max_mcs(9, 3, workers=2) == max_mcs(9, 3)


def test_budget_and_arguments():
    with pytest.raises(BudgetExceeded):
        max_mcs(17, 2)
    with pytest.raises(BudgetExceeded):
        max_mcs(11, 4)
    assert max_mcs(5, 2, budget={2: 5}) == max_mcs(5, 2)
    with pytest.raises(BudgetExceeded):
        max_mcs(6, 2, budget={2: 5})
    with pytest.raises(ValueError):
        max_mcs(3, 5)
    with pytest.raises(ValueError):
        max_mcs(0, 2)
    assert max_mcs(30, 1) == (1, b"a" * 30)


def test_csv_row():
    assert csv_row(2, 2, 2, b"ab") == "2,2,2,ab"
