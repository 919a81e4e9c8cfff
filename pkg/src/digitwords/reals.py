"""Certified base-g digits of explicitly constructed real numbers.

A :class:`RealSource` knows how to enclose its value: ``bounds(prec)``
returns integers ``L <= x * 2**prec <= U``.  Digits are only emitted once
the enclosure no longer straddles a digit boundary; otherwise the working
precision is doubled.  Sources with an exact integer route (square roots,
rationals, lacunary series in their own base, digit-concatenation numbers)
bypass the enclosure entirely.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import count
from math import gcd, isqrt
from typing import Callable, Iterator

import numpy as np

from .words import Alphabet, Word, WordStream


class PrecisionError(ArithmeticError):
    """The working-precision ceiling was hit before the digits were certified."""


@dataclass(frozen=True)
class PrecisionPolicy:
    guard_bits: int = 64
    max_bits: int = 1 << 26
    retries: int = 16


DEFAULT_POLICY = PrecisionPolicy()


def bits_for(g: int, n: int) -> int:
    """Bits needed to resolve n base-g digits (without guard)."""
    return math.ceil(n * math.log2(g)) if n else 0


def int_to_digits(k: int, g: int, n: int) -> bytes:
    """The n lowest base-g digits of k >= 0, most significant first."""
    if k < 0:
        raise ValueError("k must be non-negative")
    if n == 0:
        return b""
    if g == 2:
        s = format(k & ((1 << n) - 1), "b").zfill(n)
        return bytes(ord(c) - 48 for c in s)
    if g in (8, 16) and n <= 4000:
        s = format(k % g**n, "o" if g == 8 else "x").zfill(n)
        return bytes(int(c, 16) for c in s)
    if g == 10 and n <= 4000:
        s = str(k % 10**n).zfill(n)
        return bytes(ord(c) - 48 for c in s)
    if n <= 48:
        out = bytearray(n)
        for i in range(n - 1, -1, -1):
            k, out[i] = divmod(k, g)
        return bytes(out)
    h = n // 2
    hi, lo = divmod(k % g**n, g**h)
    return int_to_digits(hi, g, n - h) + int_to_digits(lo, g, h)


def _word(g: int, digits: bytes) -> Word:
    return Word(Alphabet.digits(g), digits)


class RealSource:
    """Base class. Subclasses implement :meth:`bounds` and may override :meth:`scaled_floor`."""

    descriptor: str = "?"
    policy: PrecisionPolicy = DEFAULT_POLICY

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.descriptor})"

    def bounds(self, prec: int) -> tuple[int, int]:
        raise NotImplementedError

    def default_precision(self, g: int, n: int) -> int:
        return bits_for(g, n) + self.policy.guard_bits

    def scaled_floor(self, g: int, n: int, prec: int | None = None) -> int:
        """floor(x * g**n), certified."""
        p = self.default_precision(g, n) if prec is None else prec
        gn = g**n
        for _ in range(self.policy.retries):
            if p > self.policy.max_bits:
                break
            lo_b, hi_b = self.bounds(p)
            lo = (lo_b * gn) >> p
            hi = (hi_b * gn) >> p
            if lo == hi:
                return lo
            p *= 2
        raise PrecisionError(f"{self.descriptor}: could not certify {n} base-{g} digits below {self.policy.max_bits} bits")

    def integer_part(self) -> int:
        return self.scaled_floor(2, 0)

    def digit_values(self, g: int, n: int, prec: int | None = None) -> bytes:
        """First n fractional base-g digits as raw symbols."""
        if g < 2:
            raise ValueError("base must be at least 2")
        if n < 0:
            raise ValueError("digit count must be non-negative")
        cache = self.__dict__.setdefault("_digit_cache", {})
        if prec is None and g in cache and len(cache[g]) >= n:
            return cache[g][:n]
        k = self.scaled_floor(g, n, prec)
        out = int_to_digits(k % g**n, g, n)
        if prec is None and len(out) > len(cache.get(g, b"")):
            cache[g] = out
        return out

    def digits(self, g: int, n: int, prec: int | None = None) -> Word:
        return _word(g, self.digit_values(g, n, prec))

    def expansion(self, g: int, n: int) -> str:
        """``integer.digits`` rendered in base g (digits as glyphs)."""
        ip = self.integer_part()
        alphabet = Alphabet.digits(g)
        head = alphabet.decode(int_to_digits(ip, g, max(1, _ndigits(ip, g)))) if ip >= 0 else str(ip)
        return f"{head}.{self.digits(g, n)}"

    def approx(self, prec: int = 64) -> Fraction:
        lo, hi = self.bounds(prec)
        return Fraction(lo + hi, 2 ** (prec + 1))

    def __float__(self) -> float:
        return float(self.approx(80))

    def scaled(self, m: int) -> "RealSource":
        return Scaled(m, self)


def _ndigits(k: int, g: int) -> int:
    n = 0
    while k:
        k //= g
        n += 1
    return n


# concrete sources -------------------------------------------------------------


class Rational(RealSource):
    def __init__(self, p: int, q: int):
        if q == 0:
            raise ValueError("q must be nonzero")
        if q < 0:
            p, q = -p, -q
        d = gcd(p, q)
        self.p, self.q = p // d, q // d
        self.descriptor = f"rational:{self.p}/{self.q}"

    def bounds(self, prec):
        v = (self.p << prec) // self.q
        return v, v if (self.p << prec) % self.q == 0 else v + 1

    def scaled_floor(self, g, n, prec=None):
        return (self.p * g**n) // self.q

    def digit_values(self, g, n, prec=None):
        return bytes(rational_expansion(self.p, self.q, g).digits(n))

    def scaled(self, m):
        return Rational(m * self.p, self.q)


class Quadratic(RealSource):
    """(a + b*sqrt(d)) / c with integers, c > 0, d >= 0."""

    def __init__(self, a: int, b: int, d: int, c: int = 1, descriptor: str | None = None):
        if c <= 0 or d < 0:
            raise ValueError("need c > 0 and d >= 0")
        self.a, self.b, self.d, self.c = a, b, d, c
        self.descriptor = descriptor or f"quadratic:({a}+{b}*sqrt({d}))/{c}"

    def _floor_num(self, scale: int) -> int:
        # floor((a*scale + b*sqrt(d)*scale) / c), exact
        A = self.a * scale
        s2 = self.b * self.b * self.d * scale * scale
        r = isqrt(s2)
        if self.b >= 0:
            return (A + r) // self.c
        if r * r == s2:
            return (A - r) // self.c
        return (A - r - 1) // self.c

    def scaled_floor(self, g, n, prec=None):
        return self._floor_num(g**n)

    def bounds(self, prec):
        lo = self._floor_num(1 << prec)
        return lo, lo + 1

    def scaled(self, m):
        if m < 0:
            return Scaled(m, self)
        return Quadratic(m * self.a, m * self.b, self.d, self.c, f"{m}*{self.descriptor}")


def Sqrt(d: int) -> Quadratic:  # noqa: N802 - reads like a constructor
    """sqrt(d) for a positive non-square integer d."""
    if d <= 0 or isqrt(d) ** 2 == d:
        raise ValueError("sqrt source needs a positive non-square integer")
    return Quadratic(0, 1, d, 1, f"sqrt:{d}")


def golden_ratio() -> Quadratic:
    return Quadratic(1, 1, 5, 2, "phi")


class Scaled(RealSource):
    def __init__(self, m: int, x: RealSource):
        self.m, self.x = m, x
        self.descriptor = f"{m}*{x.descriptor}"

    def bounds(self, prec):
        lo, hi = self.x.bounds(prec)
        lo, hi = self.m * lo, self.m * hi
        return (lo, hi) if lo <= hi else (hi, lo)


class Sum(RealSource):
    def __init__(self, x: RealSource, y: RealSource):
        self.x, self.y = x, y
        self.descriptor = f"({x.descriptor})+({y.descriptor})"

    def bounds(self, prec):
        a, b = self.x.bounds(prec)
        c, d = self.y.bounds(prec)
        return a + c, b + d


class Product(RealSource):
    """x * y for positive x, y."""

    def __init__(self, x: RealSource, y: RealSource):
        self.x, self.y = x, y
        self.descriptor = f"({x.descriptor})*({y.descriptor})"

    def bounds(self, prec):
        p = prec + 16 + max(1, self.x.integer_part().bit_length() + self.y.integer_part().bit_length())
        a, b = self.x.bounds(p)
        c, d = self.y.bounds(p)
        if a < 0 or c < 0:
            raise ValueError("Product source needs positive factors")
        shift = 2 * p - prec
        return (a * c) >> shift, -((-(b * d)) >> shift)


class Reciprocal(RealSource):
    """A / x for an integer A > 0 and x > 0."""

    def __init__(self, A: int, x: RealSource):
        if A <= 0:
            raise ValueError("A must be positive")
        self.A, self.x = A, x
        self.descriptor = f"{A}/({x.descriptor})"

    def bounds(self, prec):
        p = prec + 32
        while True:
            lo, hi = self.x.bounds(p)
            if lo > 0:
                break
            p *= 2
            if p > self.policy.max_bits:
                raise PrecisionError("cannot separate x from 0")
        num = self.A << (p + prec)
        return num // hi, -((-num) // lo)


# lacunary series ----------------------------------------------------------------


def _family(name: str) -> tuple[Callable[[], Iterator[int]], str]:
    """Exponent generators for sum_n g^{-u_n}."""
    if name == "n!":
        def gen():
            f = 1
            for n in count(1):
                f *= n
                yield f
        return gen, "n!"
    if name == "n^2":
        return (lambda: (n * n for n in count(0))), "n^2"
    if name in ("tri", "n(n+1)/2"):
        return (lambda: (n * (n + 1) // 2 for n in count(1))), "tri"
    if name == "fib":
        def gen():
            # distinct Fibonacci numbers 1, 2, 3, 5, 8, ...
            a, b = 1, 2
            while True:
                yield a
                a, b = b, a + b
        return gen, "fib"
    if name.endswith("^n"):
        d = int(name[:-2])
        if d < 2:
            raise ValueError("d^n needs d >= 2")
        return (lambda: (d**n for n in count(0))), f"{d}^n"
    raise ValueError(f"unknown exponent family {name!r}")


class Lacunary(RealSource):
    """sum_n base^{-u_n} for a strictly increasing exponent sequence u_n >= 0.

    In its own base the expansion is exact: digit 1 at positions u_n, 0
    elsewhere (u_n = 0 contributes the integer part 1).
    """

    def __init__(self, base: int, family: str | Callable[[], Iterator[int]], name: str | None = None):
        if base < 2:
            raise ValueError("base must be at least 2")
        self.base = base
        if callable(family):
            self._gen, fam = family, name or "custom"
        else:
            self._gen, fam = _family(family)
        self.family = fam
        self.descriptor = f"lacunary:{fam},{base}"

    def exponents_upto(self, K: int) -> list[int]:
        out = []
        prev = -1
        for u in self._gen():
            if u <= prev:
                raise ValueError("lacunary exponents must be strictly increasing")
            if u > K:
                break
            out.append(u)
            prev = u
        return out

    def bounds(self, prec):
        K = math.ceil(prec / math.log2(self.base)) + 2
        S = sum(self.base ** (K - u) for u in self.exponents_upto(K))
        scale = self.base**K
        # tail below base^-K / (base - 1) <= base^-K
        return (S << prec) // scale, -((-((S + 1) << prec)) // scale)

    def scaled_floor(self, g, n, prec=None):
        if g == self.base:
            return sum(g ** (n - u) for u in self.exponents_upto(n))
        return super().scaled_floor(g, n, prec)

    def digit_values(self, g, n, prec=None):
        if g != self.base:
            return super().digit_values(g, n, prec)
        out = bytearray(n)
        for u in self.exponents_upto(n):
            if u >= 1:
                out[u - 1] = 1
        return bytes(out)


class WordSource(RealSource):
    """sum_{k>=1} w_k base^{-k} for an infinite word w over digit symbols.

    The native-base digits are the word itself (assumes the word is not
    ultimately base-1, which holds for every word used here).
    """

    def __init__(self, stream: WordStream, base: int, descriptor: str | None = None):
        if len(stream.alphabet) > base:
            raise ValueError("word symbols exceed the base")
        self.stream, self.base = stream, base
        self.descriptor = descriptor or f"word:{stream.name},{base}"

    def bounds(self, prec):
        K = math.ceil(prec / math.log2(self.base)) + 2
        D = _digits_to_int(self.stream.symbols(K), self.base)
        scale = self.base**K
        return (D << prec) // scale, -((-((D + 1) << prec)) // scale)

    def digit_values(self, g, n, prec=None):
        if g == self.base:
            return self.stream.symbols(n)
        return super().digit_values(g, n, prec)

    def scaled_floor(self, g, n, prec=None):
        if g == self.base:
            return _digits_to_int(self.stream.symbols(n), g)
        return super().scaled_floor(g, n, prec)


def _digits_to_int(data: bytes, g: int) -> int:
    if len(data) <= 64:
        v = 0
        for d in data:
            v = v * g + d
        return v
    h = len(data) // 2
    return _digits_to_int(data[:h], g) * g ** (len(data) - h) + _digits_to_int(data[h:], g)


class NesterenkoEta(RealSource):
    """eta = 1 - sum_{n>=1} 3^{-n(n+1)/2}.

    Base-3 digits: 1 at the triangular positions 1, 3, 6, 10, ... and 2
    elsewhere.
    """

    descriptor = "eta"

    def __init__(self):
        self.lacunary = Lacunary(3, "tri")

    def bounds(self, prec):
        lo, hi = self.lacunary.bounds(prec)
        return (1 << prec) - hi, (1 << prec) - lo

    def digit_values(self, g, n, prec=None):
        if g != 3:
            return super().digit_values(g, n, prec)
        return bytes(2 - s for s in self.lacunary.digit_values(3, n))

    def scaled_floor(self, g, n, prec=None):
        if g == 3:
            # 3^n * eta = 3^n - 3^n * S, and 3^n * S is never an integer
            return 3**n - 1 - self.lacunary.scaled_floor(3, n)
        return super().scaled_floor(g, n, prec)


def eta_source() -> NesterenkoEta:
    return NesterenkoEta()


def eta_word_source() -> WordSource:
    """sum_{k>=1} u_k 3^{-k} for u = 0121221222..., which equals eta / 3."""
    from .words import nesterenko_word

    return WordSource(nesterenko_word(), 3, "eta-word")


# rational expansions ---------------------------------------------------------


@dataclass(frozen=True)
class ExpansionReport:
    base: int
    integer_part: int
    preperiod: tuple[int, ...]
    period: tuple[int, ...]  # empty for terminating expansions

    def digits(self, n: int) -> list[int]:
        out = list(self.preperiod[:n])
        if len(out) < n and self.period:
            need = n - len(out)
            reps = need // len(self.period) + 1
            out.extend((self.period * reps)[:need])
        out.extend([0] * (n - len(out)))
        return out

    def to_fraction(self) -> Fraction:
        g = self.base
        k = len(self.preperiod)
        pre = _digits_to_int(bytes(self.preperiod), g) if k else 0
        value = Fraction(pre, g**k)
        if self.period:
            L = len(self.period)
            value += Fraction(_digits_to_int(bytes(self.period), g), (g**L - 1) * g**k)
        return self.integer_part + value

    def render(self) -> str:
        a = Alphabet.digits(self.base)
        s = f"{self.integer_part}.{a.decode(self.preperiod)}"
        if self.period:
            s += f"({a.decode(self.period)})"
        return s


def rational_expansion(p: int, q: int, g: int) -> ExpansionReport:
    """Preperiod and period of p/q in base g by long division with remainder-cycle detection."""
    if q < 1:
        raise ValueError("q must be positive")
    if g < 2:
        raise ValueError("base must be at least 2")
    d = gcd(p, q)
    p, q = p // d, q // d
    ip, r = divmod(p, q)
    seen: dict[int, int] = {}
    digits: list[int] = []
    while r and r not in seen:
        seen[r] = len(digits)
        dgt, r = divmod(r * g, q)
        digits.append(dgt)
    if not r:
        return ExpansionReport(g, ip, tuple(digits), ())
    k = seen[r]
    return ExpansionReport(g, ip, tuple(digits[:k]), tuple(digits[k:]))


# B(x, n) -------------------------------------------------------------------------


def ones_count(x: RealSource, n: int) -> int:
    """B(x, n): number of 1s among the first n binary digits after the point."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return x.digit_values(2, n).count(1) if n else 0


def _ones_prefix(x: RealSource, n: int) -> np.ndarray:
    """B(x, k) for k = 0..n."""
    d = np.frombuffer(x.digit_values(2, n), dtype=np.uint8)
    return np.concatenate(([0], np.cumsum(d, dtype=np.int64)))


@dataclass
class InequalityCheck:
    name: str
    violations: list[int]
    n_max: int

    @property
    def n0(self) -> int:
        """Empirical threshold: one past the largest violated n."""
        return (max(self.violations) + 1) if self.violations else 1

    @property
    def holds_from_n0(self) -> bool:
        return self.n0 <= self.n_max


@dataclass
class BReport:
    n_max: int
    checks: dict[str, InequalityCheck] = field(default_factory=dict)


def check_b_inequalities(x: RealSource, y: RealSource, n_max: int, A: int = 1) -> BReport:
    """Check the sum, product and reciprocal inequalities for B(., n), n = 1..n_max."""
    s = Sum(x, y)
    prod = Product(x, y)
    inv = Reciprocal(A, x)
    Bx, By = _ones_prefix(x, n_max), _ones_prefix(y, n_max)
    Bs, Bp, Bi = _ones_prefix(s, n_max), _ones_prefix(prod, n_max), _ones_prefix(inv, n_max)
    n = np.arange(n_max + 1)
    ok_sum = Bs <= Bx + By + 1
    log_term = math.log2(s.integer_part() + 1)  # log2 floor(x + y + 1)
    ok_prod = Bp <= Bx * By + log_term
    # floor(log2(x + A/x + 1)) = bit_length(floor(x + A/x + 1)) - 1
    v = Sum(Sum(x, inv), Rational(1, 1)).integer_part()
    ok_rec = Bx * Bi >= n - 1 - (v.bit_length() - 1)
    report = BReport(n_max)
    for name, ok in (("sum", ok_sum), ("product", ok_prod), ("reciprocal", ok_rec)):
        bad = np.flatnonzero(~ok[1:]) + 1
        report.checks[name] = InequalityCheck(name, bad.tolist(), n_max)
    return report


def leading_ones_prefix(x: RealSource, n: int) -> np.ndarray:
    """Ones among the first k significant binary digits of x > 0 (integer part first), k = 0..n."""
    ip = x.integer_part()
    head = np.frombuffer(bytes(int(c) for c in bin(ip)[2:]) if ip else b"", dtype=np.uint8)
    tail = np.frombuffer(x.digit_values(2, max(0, n - head.size)), dtype=np.uint8)
    d = np.concatenate((head, tail))[:n]
    return np.concatenate(([0], np.cumsum(d, dtype=np.int64)))


def fit_ones_lower_bound(x: RealSource, n_max: int, degree: int = 2, n_min: int = 1) -> float:
    """Largest C with (ones among the first n digits of x) >= C n^{1/degree}, n_min <= n <= n_max.

    Digits are counted from the most significant one, so the integer part
    of x contributes its binary digits first.
    """
    B = leading_ones_prefix(x, n_max)
    n = np.arange(n_min, n_max + 1)
    return float((B[n_min:] / n ** (1.0 / degree)).min())


# normality -------------------------------------------------------------------------


@dataclass
class NormalityReport:
    base: int
    block_len: int
    n: int
    counts: np.ndarray
    frequencies: np.ndarray
    max_deviation: float
    threshold: float
    overlapping: bool

    @property
    def consistent(self) -> bool:
        """Empirically consistent with simple normality in base g^m at this horizon."""
        return self.max_deviation < self.threshold

    def block(self, i: int) -> str:
        return Alphabet.digits(self.base).decode(int_to_digits(i, self.base, self.block_len))


def normality_stats(
    x: RealSource | Word | WordStream,
    g: int,
    block_len: int,
    n: int,
    threshold: float = 0.01,
    overlapping: bool = True,
) -> NormalityReport:
    """Empirical frequency of each length-m block among the first n digits."""
    from .complexity import _factor_codes

    m = block_len
    if n < 16 * g**m:
        warnings.warn(f"n = {n} is small compared with g^m = {g**m}; frequencies are noisy", stacklevel=2)
    if isinstance(x, Word):
        data = x.symbols[:n]
    elif isinstance(x, WordStream):
        data = x.symbols(n)
    else:
        data = x.digit_values(g, n)
    arr = np.frombuffer(data, dtype=np.uint8).astype(np.int64)
    codes = _factor_codes(arr, m, g)
    if not overlapping:
        codes = codes[::m]
    counts = np.bincount(codes, minlength=g**m)
    freqs = counts / counts.sum()
    dev = float(np.abs(freqs - g ** (-m)).max())
    return NormalityReport(g, m, n, counts, freqs, dev, threshold, overlapping)


# Liouville ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LiouvilleWitness:
    a: int
    N: int
    p: int
    q: int
    residual: tuple[Fraction, Fraction]  # enclosure of q*theta - p
    bound: tuple[Fraction, Fraction]  # enclosure of (theta - 1) / a^(2N)

    @property
    def holds(self) -> bool:
        """0 < q theta - p < (theta - 1) a^(-2N), decided on the enclosures."""
        return self.residual[0] > 0 and self.residual[1] < self.bound[0]


def liouville_witness(a: int, N: int, guard_bits: int = 64) -> LiouvilleWitness:
    """Explicit rational approximation p/q of theta = sum_{n>=0} a^{-n^2}."""
    if a < 2 or N < 1:
        raise ValueError("need a >= 2 and N >= 1")
    q = a ** (N * N)
    p = sum(a ** (N * N - n * n) for n in range(N + 1))
    theta = Lacunary(a, "n^2")
    prec = math.ceil(((N + 1) ** 2 + 2 * N) * math.log2(a)) + guard_bits
    lo, hi = theta.bounds(prec)
    scale = 1 << prec
    residual = (Fraction(q * lo, scale) - p, Fraction(q * hi, scale) - p)
    a2n = a ** (2 * N)
    bound = (Fraction(lo - scale, scale * a2n), Fraction(hi - scale, scale * a2n))
    return LiouvilleWitness(a, N, p, q, residual, bound)


# Mahler block search -------------------------------------------------------------------


@dataclass(frozen=True)
class BlockSearch:
    multiplier: int | None  # None: not found at this horizon
    position: int | None  # 1-based digit position of the first occurrence
    m_max: int
    horizon: int


def block_search(x: RealSource, g: int, block: str | Word, horizon: int, m_max: int | None = None) -> BlockSearch:
    """Smallest m <= m_max such that ``block`` occurs in the first ``horizon`` base-g digits of m*x."""
    alphabet = Alphabet.digits(g)
    pattern = block.symbols if isinstance(block, Word) else alphabet.encode(block)
    k = len(pattern)
    if k == 0:
        raise ValueError("empty block")
    if m_max is None:
        m_max = 2 * g ** (k + 1)
    for m in range(1, m_max + 1):
        data = x.scaled(m).digit_values(g, horizon)
        i = data.find(pattern)
        if i >= 0:
            return BlockSearch(m, i + 1, m_max, horizon)
    return BlockSearch(None, None, m_max, horizon)


# descriptors ---------------------------------------------------------------------------


def parse_source(desc: str) -> RealSource:
    """Build a source from a descriptor such as ``sqrt:2``, ``rational:1/7``,
    ``lacunary:2^n``, ``lacunary:n!,10``, ``champernowne:2``, ``stoneham:3,2``,
    ``copeland-erdos:10``, ``bbp:pi16``, ``eta``, ``phi`` or ``3*sqrt:2``.
    """
    desc = desc.strip()
    head, _, rest = desc.partition("*")
    if rest and head.lstrip("-").isdigit():
        return parse_source(rest).scaled(int(head))
    kind, _, arg = desc.partition(":")
    kind = kind.lower()
    try:
        if kind == "sqrt":
            return Sqrt(int(arg))
        if kind == "rational":
            p, _, q = arg.partition("/")
            return Rational(int(p), int(q or 1))
        if kind == "lacunary":
            fam, _, base = arg.partition(",")
            return Lacunary(int(base or 2), fam)
        if kind == "champernowne":
            from .constructions import champernowne

            return champernowne(int(arg or 10))
        if kind == "stoneham":
            from .constructions import korobov_stoneham

            a, _, g = arg.partition(",")
            return korobov_stoneham(int(a), int(g))
        if kind in ("copeland-erdos", "copeland_erdos"):
            from .constructions import copeland_erdos

            return copeland_erdos(int(arg or 10))
        if kind == "bbp":
            from .bbp import eval_spec, spec_by_name

            return eval_spec(spec_by_name(arg))
        if kind == "eta":
            return eta_source()
        if kind == "phi":
            return golden_ratio()
    except (TypeError, ValueError) as exc:
        raise ValueError(f"bad source descriptor {desc!r}: {exc}") from exc
    raise ValueError(f"unknown source descriptor {desc!r}")
