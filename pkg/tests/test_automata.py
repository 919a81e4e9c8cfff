import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from digitwords.automata import BUILTINS, ORACLE_FOR, Dfao, builtin, eval, predicate_word, word_of
from digitwords.words import rudin_shapiro_word


def test_ptm_trace_for_nine():
    m = builtin("ptm")
    assert eval(m, 9) == "0"
    assert m.trace(9) == ["i", "a", "a", "a", "i"]


def test_eval_examples():
    assert eval(builtin("powers2"), 2) == "1"
    for name in BUILTINS:
        m = builtin(name)
        assert eval(m, 0) == m.outputs[m.states.index(m.initial)]


@pytest.mark.parametrize(
    "name,prefix",
    [
        ("powers2", "01101000100000001000"),
        ("baum_sweet", "110110010100100110010"),
        ("paper_fold", "1101100111001001"),
        ("ptm", "01101001100101101"),
    ],
)
def test_builtin_prefixes(name, prefix):
    assert str(word_of(builtin(name)).prefix(len(prefix))) == prefix


def test_builtin_tables():
    p2 = builtin("powers2")
    assert p2.states == ("i", "a", "b")
    assert dict(zip(p2.states, p2.outputs)) == {"i": "0", "a": "1", "b": "0"}
    bs = builtin("baum_sweet")
    assert dict(zip(bs.states, bs.outputs)) == {"i": "1", "a": "0", "b": "0"}
    pf = builtin("paper_fold")
    assert dict(zip(pf.states, pf.outputs)) == {"i": "1", "a": "1", "b": "1", "c": "0"}


def test_predicate_prefixes():
    assert str(predicate_word("ptm_popcount", 17).prefix(17)) == "01101001100101101"
    assert str(predicate_word("rudin_shapiro_11count", 16).prefix(16)) == "aaabaabaaaabbbab"
    assert str(predicate_word("paper_fold_recursive", 16).prefix(16)) == "1101100111001001"


@pytest.mark.parametrize("name", sorted(BUILTINS))
def test_oracle_equivalence(name):
    N = 1 << 16
    assert word_of(builtin(name)).symbols(N) == predicate_word(ORACLE_FOR[name], N).symbols(N)


def test_rudin_shapiro_morphic_vs_counting():
    N = 1 << 14
    assert rudin_shapiro_word().symbols(N) == predicate_word("rudin_shapiro_11count", N).symbols(N)


@given(st.integers(min_value=1, max_value=10**6), st.integers(min_value=1, max_value=5))
def test_leading_zeros_do_not_matter(n, zeros):
    # appending most-significant zeros = extra 0 digits at the end of the LSD-first string
    for name in ("ptm", "powers2"):
        m = builtin(name)
        assert m.outputs[m.run(m.digits(n) + [0] * zeros)] == m.eval(n)


@given(st.integers(min_value=0, max_value=10**6))
def test_msd_mode_agrees_for_palindromic_machines(n):
    # popcount parity does not depend on reading order
    m = builtin("ptm")
    assert m.eval(n, msd_first=True) == m.eval(n)


def test_json_roundtrip():
    for name in BUILTINS:
        m = builtin(name)
        again = Dfao.from_json(m.to_json())
        assert again == m
        assert json.loads(m.to_json())["base"] == 2


def test_invalid_automata():
    with pytest.raises(ValueError):
        Dfao(2, ("i",), "i", ((0,),), ("0",))  # not total
    with pytest.raises(ValueError):
        Dfao(2, ("i",), "x", ((0, 0),), ("0",))
    with pytest.raises(ValueError):
        builtin("nope")
    with pytest.raises(ValueError):
        builtin("ptm").eval(-1)
