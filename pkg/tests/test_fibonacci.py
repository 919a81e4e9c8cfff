from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from digitwords.fibonacci import (
    beatty_indices,
    danilov_stream,
    fib,
    floor_k_phi,
    rabbit,
    rabbit_generations,
    zeckendorf,
)


def test_fib_values():
    assert (fib(0), fib(1), fib(10)) == (0, 1, 55)
    a, b = 0, 1
    for n in range(300):
        assert fib(n) == a
        a, b = b, a + b


def test_zeckendorf_examples():
    assert zeckendorf(51).indices == (9, 7, 4, 2)
    assert zeckendorf(1).indices == (2,)


def brute_zeckendorf(n):
    ks = [k for k in range(2, 16) if fib(k) <= n]
    for r in range(1, len(ks) + 1):
        for combo in combinations(ks, r):
            if sum(fib(k) for k in combo) == n and all(b - a >= 2 for a, b in zip(combo, combo[1:])):
                return tuple(sorted(combo, reverse=True))


@pytest.mark.parametrize("n", range(1, 201))
def test_zeckendorf_against_brute_force(n):
    assert zeckendorf(n).indices == brute_zeckendorf(n)


def test_zeckendorf_valid_up_to_10k():
    for n in range(1, 10_001):
        z = zeckendorf(n)  # the constructor validates sum and spacing
        assert z.n == n


def test_rabbits():
    assert rabbit(51) == "A" and rabbit(2) == "Y"
    assert ",".join(rabbit(n) for n in range(1, 15)) == "A,Y,A,A,Y,A,Y,A,A,Y,A,A,Y,A"


def test_rabbit_generations_concatenate():
    gens = rabbit_generations(12)
    assert gens[:4] == ["Y", "A", "AY", "AYA"]
    assert "".join(rabbit(n) for n in range(1, len(gens[-1]) + 1)) == gens[-1]


def test_beatty_examples():
    assert beatty_indices("phi", 4) == [1, 3, 4, 6]
    assert beatty_indices("phi2", 4) == [2, 5, 7, 10]
    assert floor_k_phi(32) == 51


def test_beatty_partition_and_rabbits():
    N = 10_000
    lo = [x for x in beatty_indices("phi", N) if x <= N]
    hi = [x for x in beatty_indices("phi2", N) if x <= N]
    assert sorted(lo + hi) == list(range(1, N + 1))
    A = set(lo)
    assert all((rabbit(n) == "A") == (n in A) for n in range(1, N + 1))


@given(st.integers(min_value=1, max_value=10**12))
def test_floor_k_phi_matches_decimal(k):
    from decimal import Decimal, getcontext

    getcontext().prec = 60
    phi = (1 + Decimal(5).sqrt()) / 2
    assert floor_k_phi(k) == int(k * phi)


def test_danilov():
    s = danilov_stream()
    assert list(s.symbols(14)) == [0, 1, 0, 0, 1, 0, 1, 0, 0, 1, 0, 0, 1, 0]
    assert s[0] == "0"
    data = s.symbols(10_000)
    assert all(data[n] == (rabbit(n + 1) == "Y") for n in range(10_000))


def test_errors():
    with pytest.raises(ValueError):
        zeckendorf(0)
    with pytest.raises(ValueError):
        beatty_indices("e", 3)
    with pytest.raises(ValueError):
        fib(-1)
