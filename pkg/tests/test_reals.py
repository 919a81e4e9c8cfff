import random
import warnings
from decimal import Decimal, getcontext
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st

from digitwords.reals import (
    Lacunary,
    PrecisionError,
    PrecisionPolicy,
    Product,
    Quadratic,
    Rational,
    Reciprocal,
    RealSource,
    Sqrt,
    Sum,
    block_search,
    check_b_inequalities,
    eta_source,
    eta_word_source,
    fit_ones_lower_bound,
    int_to_digits,
    liouville_witness,
    normality_stats,
    ones_count,
    parse_source,
    rational_expansion,
)
from digitwords.words import nesterenko_word

SQRT2_DEC = "41421356237309504880168872420"
SQRT2_BIN = "01101010000010011110011001100111111100111011110011"


def decimal_sqrt_digits(d, n):
    getcontext().prec = n + 30
    s = str(Decimal(d).sqrt())
    return s.split(".")[1][:n]


def test_sqrt2_golden():
    assert str(Sqrt(2).digits(10, 29)) == SQRT2_DEC
    assert Sqrt(2).integer_part() == 1
    assert str(Sqrt(2).digits(2, 50)) == SQRT2_BIN


@pytest.mark.parametrize("d", [2, 3, 5, 7, 10, 99, 12345])
def test_sqrt_against_decimal(d):
    assert str(Sqrt(d).digits(10, 500)) == decimal_sqrt_digits(d, 500)


def test_lacunary_exact():
    assert str(Lacunary(2, "2^n").digits(2, 19)) == "1101000100000001000"
    fib_src = Lacunary(2, "fib")
    d = fib_src.digits(2, 60).symbols
    assert [i + 1 for i, x in enumerate(d) if x] == [1, 2, 3, 5, 8, 13, 21, 34, 55]
    kempner = Lacunary(10, "2^n")
    assert [i + 1 for i, x in enumerate(kempner.digits(10, 70).symbols) if x] == [1, 2, 4, 8, 16, 32, 64]


@pytest.mark.parametrize("family,base", [("2^n", 2), ("n!", 10), ("fib", 3), ("tri", 3), ("3^n", 5)])
def test_lacunary_ones_count_and_cross_base(family, base):
    src = Lacunary(base, family)
    N = 400
    assert sum(src.digits(base, N).symbols) == len([u for u in src.exponents_upto(N) if u >= 1])
    # the certified non-native route agrees with mpmath
    mpmath.mp.prec = 2000
    exact = mpmath.fsum(mpmath.mpf(base) ** -u for u in src.exponents_upto(600))
    frac = exact - mpmath.floor(exact)
    digs = []
    for _ in range(100):
        frac *= 7
        digs.append(int(mpmath.floor(frac)))
        frac -= digs[-1]
    assert list(src.digits(7, 100).symbols) == digs


def test_rational_expansion_examples():
    r = rational_expansion(137174210, 1111111111, 10)
    assert "".join(map(str, r.period)) == "1234567890" and r.preperiod == ()
    assert rational_expansion(1, 2, 10).preperiod == (5,) and rational_expansion(1, 2, 10).period == ()
    assert "".join(map(str, rational_expansion(1, 7, 10).period)) == "142857"
    assert rational_expansion(1234567890, 9999999999, 10).to_fraction() == Fraction(137174210, 1111111111)


@given(st.integers(min_value=-10**6, max_value=10**6), st.integers(min_value=1, max_value=5000), st.integers(min_value=2, max_value=20))
def test_rational_roundtrip(p, q, g):
    assert rational_expansion(p, q, g).to_fraction() == Fraction(p, q)


@given(st.integers(min_value=0, max_value=10**6), st.integers(min_value=1, max_value=997), st.integers(min_value=2, max_value=16))
def test_rational_digits_long_division(p, q, g):
    digits = Rational(p, q).digits(g, 40).symbols
    r = p % q
    expect = []
    for _ in range(40):
        r *= g
        expect.append(r // q)
        r %= q
    assert list(digits) == expect


def test_ones_count_examples():
    assert ones_count(Lacunary(2, "2^n"), 19) == 5  # 1101000100000001000: positions 1, 2, 4, 8, 16
    assert ones_count(Lacunary(10, "n!"), 6) == 3
    assert ones_count(Sqrt(2), 0) == 0


def test_b_inequalities_sqrt2_sqrt3():
    rep = check_b_inequalities(Sqrt(2), Sqrt(3), 2000)
    for chk in rep.checks.values():
        assert chk.holds_from_n0
        assert all(v < chk.n0 for v in chk.violations)


def test_bbcp_probe():
    C = fit_ones_lower_bound(Sqrt(2), 10_000)
    assert C > 0


def test_normality_stats():
    lac = normality_stats(Lacunary(2, "2^n"), 2, 1, 10_000)
    assert lac.frequencies[1] < 0.01 and not lac.consistent
    third = normality_stats(Rational(1, 3), 10, 1, 1000)
    assert third.counts[3] == 1000 and not third.consistent
    with pytest.warns(UserWarning):
        normality_stats(Sqrt(2), 10, 3, 1000)


def test_liouville_examples():
    w = liouville_witness(2, 3)
    assert (w.p, w.q) == (801, 512) and w.holds
    w = liouville_witness(10, 2)
    assert (w.p, w.q) == (11001, 10_000) and w.holds
    assert liouville_witness(2, 1).holds


@given(st.integers(min_value=2, max_value=12), st.integers(min_value=1, max_value=6))
def test_liouville_always_holds(a, N):
    assert liouville_witness(a, N).holds


def test_block_search():
    assert block_search(Sqrt(2), 10, "7", 100).multiplier == 1
    res = block_search(Lacunary(2, "2^n"), 2, "11", 10_000)
    assert res.multiplier is not None and res.multiplier <= 16
    miss = block_search(Lacunary(2, "2^n"), 2, "111", 100, m_max=1)
    assert miss.multiplier is None


def test_block_search_finds_smallest_multiplier():
    x = Sqrt(2)
    res = block_search(x, 10, "000", 200)
    for m in range(1, res.multiplier):
        assert "000" not in str(x.scaled(m).digits(10, 200))
    assert "000" in str(x.scaled(res.multiplier).digits(10, 200))


def test_eta():
    eta = eta_source()
    tail = nesterenko_word().tail(1)
    assert eta.digits(3, 1000).symbols == tail.symbols(1000)
    s = Lacunary(3, "tri").digits(3, 60).symbols
    assert [i + 1 for i, x in enumerate(s) if x] == [1, 3, 6, 10, 15, 21, 28, 36, 45, 55]
    assert nesterenko_word()[0] == "0"
    # the word read as base-3 digits is eta / 3
    w = eta_word_source()
    assert w.digits(3, 300).symbols == nesterenko_word().symbols(300)
    lo, hi = eta.bounds(200)
    lo3, hi3 = w.bounds(200)
    assert abs(3 * lo3 - lo) <= 8


def test_arithmetic_sources():
    mpmath.mp.prec = 800
    s = Sum(Sqrt(2), Sqrt(3))
    p = Product(Sqrt(2), Sqrt(3))
    r = Reciprocal(5, Sqrt(2))
    for src, val in ((s, mpmath.sqrt(2) + mpmath.sqrt(3)), (p, mpmath.sqrt(6)), (r, 5 / mpmath.sqrt(2))):
        ref = mpmath.nstr(val, 80, strip_zeros=False).split(".")[1][:70]
        assert str(src.digits(10, 70)) == ref


def test_quadratic_negative_b():
    q = Quadratic(3, -1, 2, 1)  # 3 - sqrt(2)
    getcontext().prec = 80
    ref = str(3 - Decimal(2).sqrt()).split(".")[1][:60]
    assert str(q.digits(10, 60)) == ref


SOURCES = ["sqrt:2", "sqrt:3", "phi", "lacunary:2^n", "lacunary:n!,10", "eta", "champernowne:2", "copeland-erdos:10", "stoneham:3,2", "bbp:pi16", "bbp:log2_2", "7*sqrt:5"]


def test_certification_doubling():
    rng = random.Random(20261018)
    for _ in range(100):
        desc = rng.choice(SOURCES)
        g = rng.randint(2, 16)
        n = rng.randint(1, 300)
        src = parse_source(desc)
        base_prec = src.default_precision(g, n)
        assert src.digit_values(g, n, prec=base_prec) == src.digit_values(g, n, prec=2 * base_prec)


@given(st.sampled_from(SOURCES), st.integers(2, 12), st.integers(1, 200), st.integers(1, 200))
def test_prefix_stability(desc, g, n, m):
    src = parse_source(desc)
    a, b = sorted((n, m))
    assert src.digit_values(g, b)[:a] == src.digit_values(g, a)


class Stubborn(RealSource):
    """An enclosure that never narrows enough: always straddles a boundary."""

    descriptor = "stubborn"
    policy = PrecisionPolicy(guard_bits=8, max_bits=4096, retries=20)

    def bounds(self, prec):
        half = 1 << (prec - 1)
        return half - 1, half + 1


def test_precision_ceiling_reported():
    with pytest.raises(PrecisionError):
        Stubborn().digits(2, 10)


@given(st.integers(min_value=0, max_value=10**40), st.integers(2, 40), st.integers(1, 120))
def test_int_to_digits(k, g, n):
    d = int_to_digits(k, g, n)
    assert len(d) == n
    assert sum(x * g ** (n - 1 - i) for i, x in enumerate(d)) == k % g**n


def test_parse_errors():
    with pytest.raises(ValueError):
        parse_source("sqrt:4")
    with pytest.raises(ValueError):
        parse_source("mystery:1")
    with pytest.raises(ValueError):
        parse_source("stoneham:2,2")
    with pytest.raises(ValueError):
        Rational(1, 0)
