"""Explicit normal-number constructions as certified real sources."""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import count
from math import gcd, isqrt
from typing import Iterator

from .reals import RealSource, WordSource, _digits_to_int, int_to_digits
from .words import Alphabet, WordStream


def _digits_of(k: int, g: int) -> bytes:
    n = 1
    while g**n <= k:
        n += 1
    return int_to_digits(k, g, n)


def _concat_stream(numbers: Iterator[int], g: int, name: str) -> WordStream:
    def chunks():
        buf = bytearray()
        for k in numbers:
            buf += _digits_of(k, g)
            if len(buf) >= 8192:
                yield bytes(buf)
                buf.clear()

    return WordStream(Alphabet.digits(g), chunks(), name=name)


def champernowne(g: int = 10) -> WordSource:
    """0.1 2 3 ... (every positive integer written in base g, concatenated)."""
    if g < 2:
        raise ValueError("base must be at least 2")
    return WordSource(_concat_stream(count(1), g, f"champernowne{g}"), g, f"champernowne:{g}")


def champernowne_positions(K: int) -> list[int]:
    """c_k = k + sum_{j<=k} floor(log2 j): the position at which k's binary digits end."""
    out, c = [], 0
    for k in range(1, K + 1):
        c += k.bit_length()  # 1 + floor(log2 k)
        out.append(c)
    return out


def champernowne_closed_formula_check(K: int) -> bool:
    """Compare sum_{k<=K} k 2^{-c_k} with the first c_K binary Champernowne digits, exactly."""
    if K < 1:
        raise ValueError("K must be at least 1")
    cs = champernowne_positions(K)
    cK = cs[-1]
    partial = sum(Fraction(k, 2**c) for k, c in zip(range(1, K + 1), cs))
    digits = champernowne(2).digit_values(2, cK)
    return partial == Fraction(_digits_to_int(digits, 2), 2**cK)


class KorobovStoneham(RealSource):
    """sum_{n>=0} a^{-n} g^{-a^n} for coprime a, g >= 2."""

    def __init__(self, a: int, g: int):
        if a < 2 or g < 2:
            raise ValueError("a and g must both exceed 1")
        if gcd(a, g) != 1:
            raise ValueError(f"a = {a} and g = {g} are not coprime")
        self.a, self.g = a, g
        self.descriptor = f"stoneham:{a},{g}"

    def terms_needed(self, bits: int) -> int:
        """Smallest M with a^{-M} g^{-a^M} < 2^{-bits}."""
        lg, la = math.log2(self.g), math.log2(self.a)
        M = 0
        while M * la + self.a**M * lg < bits:
            M += 1
        return M

    def bounds(self, prec):
        M = self.terms_needed(prec + 2)
        one = 1 << prec
        lo = sum(one // (self.a**n * self.g ** (self.a**n)) for n in range(M))
        # each floor loses < 1 unit; the tail from M on is below 2 * 2^{-prec-2}
        return lo, lo + M + 1


def korobov_stoneham(a: int, g: int) -> KorobovStoneham:
    return KorobovStoneham(a, g)


def primes() -> Iterator[int]:
    """All primes in increasing order via a segmented sieve of Eratosthenes."""
    base = [2, 3, 5, 7]
    yield from base
    lo, seg = 10, 1 << 15
    while True:
        hi = lo + seg
        r = isqrt(hi) + 1
        if base[-1] < r:
            base = _small_primes(r)
        sieve = bytearray([1]) * seg
        for p in base:
            if p * p >= hi:
                break
            start = max(p * p, (lo + p - 1) // p * p)
            sieve[start - lo :: p] = bytes(len(range(start - lo, seg, p)))
        for i, flag in enumerate(sieve):
            if flag:
                yield lo + i
        lo = hi


def _small_primes(n: int) -> list[int]:
    s = bytearray([1]) * (n + 1)
    s[0:2] = b"\x00\x00"
    for p in range(2, isqrt(n) + 1):
        if s[p]:
            s[p * p :: p] = bytes(len(range(p * p, n + 1, p)))
    return [i for i, f in enumerate(s) if f]


def copeland_erdos(g: int = 10) -> WordSource:
    """0.2 3 5 7 11 13 ... (primes written in base g, concatenated)."""
    if g < 2:
        raise ValueError("base must be at least 2")
    return WordSource(_concat_stream(primes(), g, f"copeland_erdos{g}"), g, f"copeland-erdos:{g}")
