import pytest

from closed_substrings.mcs import census, compute_mcs
from closed_substrings.mrc_partition import compute_mrc_partition
from closed_substrings.core import McsKind
from closed_substrings.words import (
    MCS_DENSITY,
    WordTooLong,
    fib_census_formula,
    fib_number,
    fibonacci_word,
    thue_morse_word,
    tribonacci_word,
)


def test_fibonacci_words():
    assert fibonacci_word(0) == b"0"
    assert fibonacci_word(1) == b"1"
    assert fibonacci_word(3) == b"101"
    assert fibonacci_word(5) == b"10110101"
    for n in range(15):
        assert len(fibonacci_word(n)) == fib_number(n)
    assert all(fibonacci_word(n).startswith(b"101") for n in range(3, 15))


def test_fib_numbers():
    assert [fib_number(k) for k in range(8)] == [1, 1, 2, 3, 5, 8, 13, 21]


def test_tribonacci_words():
    assert tribonacci_word(0) == b"1"
    assert tribonacci_word(1) == b"12"
    assert tribonacci_word(2) == b"1213"
    assert tribonacci_word(3) == b"1213121"
    assert tribonacci_word(5) == tribonacci_word(4) + tribonacci_word(3) + tribonacci_word(2)


def test_thue_morse_words():
    assert thue_morse_word(0) == b"0"
    assert thue_morse_word(2) == b"0110"
    assert thue_morse_word(3) == b"01101001"
    assert len(thue_morse_word(10)) == 1024


def test_caps_and_bad_indices():
    with pytest.raises(WordTooLong):
        fibonacci_word(30, cap=1000)
    with pytest.raises(WordTooLong):
        thue_morse_word(11, cap=1024)
    with pytest.raises(WordTooLong):
        tribonacci_word(20, cap=100)
    for fn in (fibonacci_word, tribonacci_word, thue_morse_word):
        with pytest.raises(ValueError):
            fn(-1)


def test_formula_examples():
    f5 = fib_census_formula(5)
    assert (f5.sm, f5.runs, f5.gm, f5.m) == (6, 3, 1, 10)
    f6 = fib_census_formula(6)
    assert f6.gm == 2 and f6.m == 16 and f6.F_n == 13
    with pytest.raises(ValueError, match="n must be ≥ 5"):
        fib_census_formula(4)


def test_sm_f4_by_brute_classification():
    found = compute_mcs(fibonacci_word(4), compute_mrc_partition(fibonacci_word(4)))
    assert sum(m.kind is McsKind.SINGLETON for m in found) == 3


def test_formula_against_algorithm_small():
    for n in range(5, 16):
        w = fibonacci_word(n)
        assert tuple(census(compute_mcs(w, compute_mrc_partition(w)))) == fib_census_formula(n).counts()


def test_density_constant():
    assert MCS_DENSITY == pytest.approx(1.381966, abs=1e-6)
