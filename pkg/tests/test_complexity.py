from fractions import Fraction
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from digitwords.automata import BUILTINS, builtin, word_of
from digitwords.complexity import (
    complexity,
    complexity_growth_report,
    detect_period,
    distinct_factors,
    eventual_period,
    find_patterns,
    fit_linear_bound,
    fit_quadratic,
    is_sturmian_up_to,
    letter_frequency,
    power_length,
)
from digitwords.constructions import champernowne
from digitwords.fibonacci import fib
from digitwords.reals import Rational, Sqrt
from digitwords.words import Alphabet, Word, WordStream, fibonacci_word, nesterenko_word, thue_morse_word

AB = Alphabet.of("ab")


def naive_factors(data: bytes, m: int) -> int:
    return len({data[i : i + m] for i in range(len(data) - m + 1)})


def powers2_word():
    return word_of(builtin("powers2")).tail(1)


def test_powers2_table():
    assert complexity(powers2_word(), 6, 1 << 12).counts == (2, 4, 6, 7, 9, 11)


def test_fibonacci_is_sturmian():
    prof = complexity(fibonacci_word(), 10, 10_000)
    assert all(prof[m] == m + 1 for m in range(1, 11))
    census = is_sturmian_up_to(fibonacci_word(), 5, 10_000)
    assert census.is_sturmian
    assert census.right_special == {1: ["a"], 2: ["ba"], 3: ["aba"], 4: ["aaba"], 5: ["baaba"]}


def test_ptm_is_not_sturmian():
    census = is_sturmian_up_to(thue_morse_word(), 5, 10_000)
    assert not census.is_sturmian and census.witness == 2 and census.profile[2] == 4


def test_constant_word():
    const = WordStream.from_function(Alphabet.of("a"), lambda n: 0)
    assert complexity(const, 8, 100).counts == (1,) * 8


def test_periodic_word_detected():
    w = WordStream.from_function(AB, lambda n: int(n % 5 in (1, 3)))
    rep = detect_period(w, 10, 500)
    assert rep is not None and rep.period == 5 and rep.start == 0


def test_rational_digits_bounded_complexity():
    prof = complexity(Rational(1, 7).digits(10, 600), 12, 600)
    assert max(prof.counts) == 6


def test_champernowne_full_complexity():
    prof = complexity(champernowne(2).digits(2, 200_000), 10, 200_000)
    assert prof.counts == tuple(2**m for m in range(1, 11))


def test_sqrt2_growth_report():
    rep = complexity_growth_report(Sqrt(2), 2, 12, 100_000)
    ratios = [r.ratio for r in rep.rows]
    assert all(a <= b for a, b in zip(ratios, ratios[1:]))
    assert rep.rows[0].log_ratio is None


@given(st.binary(min_size=1, max_size=300).map(lambda b: bytes(x % 3 for x in b)), st.integers(min_value=1, max_value=12))
def test_distinct_factors_matches_naive(data, m):
    assert distinct_factors(data, m, 3) == (naive_factors(data, m) if m <= len(data) else 0)


def test_distinct_factors_large_alphabet_path():
    data = bytes(range(200)) * 3
    assert distinct_factors(data, 10, 200) == naive_factors(data, 10)


@pytest.mark.parametrize("name", sorted(BUILTINS))
def test_automatic_words_linear(name):
    N = 1 << 15
    prof = complexity(word_of(builtin(name)), 16, N)
    for m in range(1, 16):
        if prof[m + 1] < N - m:
            assert prof[m] <= prof[m + 1] <= 2 * prof[m]
    assert fit_linear_bound(prof) <= 8


def test_nesterenko_quadratic():
    prof = complexity(nesterenko_word(), 40, 200_000)
    coef, r2 = fit_quadratic(prof)
    assert r2 > 0.999 and coef[0] > 0


def test_fibonacci_letter_frequency():
    N = fib(25)
    freq = letter_frequency(fibonacci_word(), N)
    assert freq["a"] == Fraction(fib(24), fib(25))
    phi = (1 + math.sqrt(5)) / 2
    assert abs(float(freq["a"]) - 1 / phi) < 1e-9
    assert abs(float(freq["b"]) - 1 / phi**2) < 1e-9
    assert freq["a"] + freq["b"] == 1


def test_alternating_frequency():
    w = Word.from_text(AB, "ab" * 50)
    assert letter_frequency(w, 100) == {"a": Fraction(1, 2), "b": Fraction(1, 2)}


def test_seven_thirds_power():
    w = Word.from_text(Alphabet.of("01"), "01101001101001")
    hits = find_patterns(w, "w_power", power="7/3")
    assert power_length(Fraction(7, 3), 6) == 14
    assert any(h.start == 0 and h.root == 6 and h.length == 14 for h in hits)
    assert hits[0].text(w) == "01101001101001"


def test_ptm_overlap_free():
    assert find_patterns(thue_morse_word(), "overlap", 10_000) == []
    assert len(find_patterns(thue_morse_word(), "square", 200)) > 0


def test_square_aa():
    hits = find_patterns(Word.from_text(AB, "aa"), "square")
    assert len(hits) == 1 and hits[0].root == 1


@given(st.text(alphabet="ab", min_size=1, max_size=40))
def test_palindromes_are_palindromes(text):
    w = Word.from_text(AB, text)
    for h in find_patterns(w, "palindrome", min_length=1):
        s = h.text(w)
        assert s == s[::-1]


@given(st.text(alphabet="ab", min_size=2, max_size=40))
def test_squares_are_squares(text):
    w = Word.from_text(AB, text)
    for h in find_patterns(w, "square"):
        s = h.text(w)
        assert s[: h.root] == s[h.root :]


@given(st.lists(st.integers(0, 3), min_size=1, max_size=8), st.integers(0, 10), st.integers(2, 6))
def test_eventual_period_recovers(period, pre, reps):
    seq = [9] * pre + period * (reps + 1)
    rep = eventual_period(seq)
    assert rep is not None and rep.period <= len(period)
    # the report reproduces the sequence
    P, s = rep.period, rep.start
    assert all(seq[i] == seq[i - P] for i in range(s + P, len(seq)))


def test_bad_pattern_kind():
    with pytest.raises(ValueError):
        find_patterns(Word.from_text(AB, "ab"), "cube")
    with pytest.raises(ValueError):
        find_patterns(Word.from_text(AB, "ab"), "w_power", power="1")
