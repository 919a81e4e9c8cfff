import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from digitwords.fibonacci import fib
from digitwords.words import (
    FIBONACCI,
    NESTERENKO,
    THUE_MORSE,
    Alphabet,
    Morphism,
    Word,
    WordStream,
    concat,
    fibonacci_finite_word,
    fibonacci_word,
    fixed_point,
    letter_occurrences,
    morphic_image,
    nesterenko_word,
    rudin_shapiro_word,
    thue_morse_word,
)

AB = Alphabet.of("ab")


def w(text, alphabet=AB):
    return Word.from_text(alphabet, text)


def test_concat_examples():
    assert str(concat(Word(AB), w("ab"))) == "ab"
    assert str(concat(w("aba"), w("ab"))) == "abaab"
    bits = Alphabet.of("01")
    assert str(w("01", bits) + w("10", bits)) == "0110"


def test_concat_alphabet_mismatch():
    with pytest.raises(ValueError):
        concat(w("ab"), w("01", Alphabet.of("01")))


def test_apply_examples():
    assert str(FIBONACCI.apply(w("aba"))) == "abaab"
    assert str(THUE_MORSE.apply(w("ab"))) == "abba"
    assert str(FIBONACCI.apply(Word(AB))) == ""


def test_fixed_point_prefixes():
    assert str(fibonacci_word().prefix(34)) == "abaababaabaababaababaabaababaabaab"
    assert str(thue_morse_word().prefix(17)) == "abbabaabbaababbab"
    assert str(nesterenko_word().prefix(10)) == "0121221222"
    assert str(rudin_shapiro_word().prefix(16)) == "aaabaabaaaabbbab"
    assert str(fibonacci_word().prefix(5)) == "abaab"
    assert str(fibonacci_word().prefix(0)) == ""


def test_rudin_shapiro_sigma_fixed_point():
    from digitwords.words import RUDIN_SHAPIRO_SIGMA

    assert str(fixed_point(RUDIN_SHAPIRO_SIGMA, "1").prefix(12)) == "121312421213"


def test_identity_morphic_image_is_fixed_point():
    ident = Morphism.from_mapping({"a": "a", "b": "b"})
    assert morphic_image(FIBONACCI, "a", ident).symbols(500) == fibonacci_word().symbols(500)


def test_fibonacci_word_under_coding_matches_danilov():
    from digitwords.fibonacci import danilov_stream

    code = Morphism.from_mapping({"a": "0", "b": "1"}, target="01")
    coded = fibonacci_word().map(code)
    assert str(coded.prefix(13)) == "0100101001001"
    assert coded.symbols(10_000) == danilov_stream().symbols(10_000)


@pytest.mark.parametrize("n", range(2, 21))
def test_prefix_fn_matches_recursive_words(n):
    fn = fibonacci_finite_word(n)
    assert len(fn) == fib(n)
    assert fibonacci_word().symbols(fib(n)) == fn.symbols
    # F_{n-1} letters a and F_{n-2} letters b
    if n >= 3:
        assert fn.count("a") == fib(n - 1) and fn.count("b") == fib(n - 2)


def test_f5_f7():
    assert str(fibonacci_finite_word(5)) == "abaab"
    assert str(fibonacci_finite_word(7)) == "abaababaabaab"


@given(st.integers(min_value=0, max_value=10_000))
def test_apply_prefix_is_prefix(n):
    s = fibonacci_word()
    img = FIBONACCI.apply(s.prefix(n))
    assert s.symbols(len(img)) == img.symbols


@given(st.integers(min_value=0, max_value=2000))
def test_uniform_image_length_scales(n):
    s = thue_morse_word()
    assert len(THUE_MORSE.apply(s.prefix(n))) == 2 * n


def test_non_prolongable_letter_rejected():
    with pytest.raises(ValueError):
        fixed_point(FIBONACCI, "b")
    with pytest.raises(ValueError):
        fixed_point(NESTERENKO, "2")  # 2 -> 2, u empty


def test_erasing_morphism_rejected():
    mu = Morphism.from_mapping({"a": "ab", "b": ""})
    with pytest.raises(ValueError):
        fixed_point(mu, "a")


def test_morphism_json_roundtrip():
    text = THUE_MORSE.to_json()
    assert json.loads(text)["map"] == {"a": "ab", "b": "ba"}
    assert Morphism.from_json(text) == THUE_MORSE


def test_stream_memoizes_and_is_consistent():
    s = fibonacci_word()
    a = s.symbols(1000)
    b = s.symbols(200)
    assert a[:200] == b
    assert s[0] == "a" and s[1] == "b"


def test_finite_stream_raises_past_end():
    s = WordStream(AB, [b"\x00\x01"])
    assert str(s.prefix(2)) == "ab"
    with pytest.raises(ValueError):
        s.prefix(3)


def test_tail_of_finite_stream():
    s = WordStream(AB, [b"\x00\x01\x01"])
    assert str(s.tail(1).prefix(2)) == "bb"


def test_letter_occurrences_nesterenko():
    counts = letter_occurrences(nesterenko_word(), 1000)
    # 0 occurs once: the word is not recurrent
    assert counts["0"] == 1 and counts["1"] > 1


def test_multichar_alphabet_roundtrip():
    big = Alphabet.digits(40)
    word = Word(big, bytes([0, 39, 12]))
    assert str(word) == "0,39,12"
    assert Word.from_text(big, str(word)) == word
