"""Continued fractions: certified expansion, word-driven quotients, convergents,
irrationality-exponent estimates and Roy's simultaneous approximation statistic."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import islice
from typing import Iterable, Iterator

import numpy as np

from .reals import PrecisionError, Quadratic, Rational, RealSource
from .words import WordStream, fibonacci_word

PHI = (1 + math.sqrt(5)) / 2
INV_PHI = PHI - 1


class ContinuedFraction:
    """[a_0; a_1, a_2, ...] with lazily produced partial quotients."""

    def __init__(self, a0: int, quotients: Iterable[int], provenance: str = ""):
        self.a0 = a0
        self._it: Iterator[int] = iter(quotients)
        self._q: list[int] = []
        self.provenance = provenance

    def __repr__(self) -> str:
        shown = ", ".join(map(str, self._q[:10]))
        return f"ContinuedFraction([{self.a0}; {shown}{', ...' if len(self._q) > 10 else ''}], {self.provenance!r})"

    def quotients(self, n: int) -> list[int]:
        """a_1 .. a_n (fewer if the expansion is finite)."""
        while len(self._q) < n:
            a = next(self._it, None)
            if a is None:
                break
            if a < 1:
                raise ValueError(f"partial quotient {a} < 1")
            self._q.append(a)
        return self._q[:n]

    def terms(self, n: int) -> list[int]:
        """a_0 .. a_n."""
        return [self.a0] + self.quotients(n)


@dataclass(frozen=True)
class Convergent:
    n: int
    p: int
    q: int

    @property
    def value(self) -> Fraction:
        return Fraction(self.p, self.q)


def convergents(cf: ContinuedFraction, n: int) -> list[Convergent]:
    """p_k / q_k for k = 0..n by the usual recurrences."""
    if n < 0:
        raise ValueError("n must be non-negative")
    out = []
    p0, q0, p1, q1 = 1, 0, cf.a0, 1
    out.append(Convergent(0, p1, q1))
    for k, a in enumerate(cf.quotients(n), start=1):
        p0, q0, p1, q1 = p1, q1, a * p1 + p0, a * q1 + q0
        out.append(Convergent(k, p1, q1))
    return out


def _interval_cf(lo: Fraction, hi: Fraction, n: int) -> tuple[int, list[int]]:
    """Quotients shared by every number in [lo, hi] (at most n after a_0)."""
    a0 = math.floor(lo)
    if math.floor(hi) != a0:
        return a0, None  # type: ignore[return-value]
    out: list[int] = []
    lo, hi = lo - a0, hi - a0
    while len(out) < n:
        if lo <= 0:
            break  # the interval touches a rational endpoint
        lo, hi = 1 / hi, 1 / lo
        a = math.floor(lo)
        if math.floor(hi) != a:
            break
        out.append(a)
        lo, hi = lo - a, hi - a
    return a0, out


def cf_expand(x: RealSource, n_terms: int, prec: int = 128, max_bits: int = 1 << 20) -> ContinuedFraction:
    """First n_terms partial quotients of an irrational x, each certified.

    The enclosure of x is expanded at both ends; a quotient is kept only if
    both ends agree on it.  Precision doubles until n_terms quotients agree.
    """
    if isinstance(x, Rational) or (isinstance(x, Quadratic) and math.isqrt(x.d) ** 2 == x.d):
        raise ValueError("continued-fraction expansion needs an irrational input")
    p = prec
    while p <= max_bits:
        lo, hi = x.bounds(p)
        a0, qs = _interval_cf(Fraction(lo, 1 << p), Fraction(hi, 1 << p), n_terms)
        if qs is not None and len(qs) >= n_terms:
            return ContinuedFraction(a0, qs, provenance=f"expand:{x.descriptor}")
        p *= 2
    raise PrecisionError(f"{x.descriptor}: {n_terms} quotients not certified below {max_bits} bits")


def cf_from_word(w: WordStream, A: int, B: int) -> ContinuedFraction:
    """[0; w_1 -> A/B, w_2 -> A/B, ...] with the first alphabet letter mapped to A."""
    if A == B or A < 1 or B < 1:
        raise ValueError("A and B must be distinct positive integers")
    if len(w.alphabet) > 2:
        raise ValueError("word must be over a two-letter alphabet")
    sub = (A, B)

    def gen():
        for i in range(1 << 62):
            yield sub[w.symbol_at(i)]

    return ContinuedFraction(0, gen(), provenance=f"word:{w.name}:{A},{B}")


class ContinuedFractionSource(RealSource):
    """The value of an infinite continued fraction, enclosed by consecutive convergents."""

    def __init__(self, cf: ContinuedFraction):
        self.cf = cf
        self.descriptor = f"cf:{cf.provenance}"

    def bounds(self, prec):
        n = 2
        while True:
            cs = convergents(self.cf, n)
            if len(cs) < n + 1:
                raise ValueError("finite continued fraction: value is rational")
            a, b = cs[-2], cs[-1]
            if a.q * b.q > 1 << (prec + 1):
                break
            n *= 2
        x, y = sorted((a.value, b.value))
        lo = math.floor(x * (1 << prec))
        return lo, math.ceil(y * (1 << prec))


@dataclass
class ExponentReport:
    kappa: dict[int, float]  # n -> 1 + log q_{n+1} / log q_n
    maximum: float
    tail_slope: float  # least-squares slope of kappa over the last quarter of n

    def at(self, n: int) -> float:
        return self.kappa[n]


def irrationality_exponent_estimate(cf: ContinuedFraction, n: int) -> ExponentReport:
    """kappa_k = 1 + log q_{k+1} / log q_k for the k <= n with q_k >= 2."""
    if n < 2:
        raise ValueError("n must be at least 2")
    cs = convergents(cf, n + 1)
    kappa = {}
    for k in range(1, min(n, len(cs) - 2) + 1):
        qk, qk1 = cs[k].q, cs[k + 1].q
        if qk >= 2:
            kappa[k] = 1 + _log(qk1) / _log(qk)
    ks = sorted(kappa)
    tail = ks[-max(2, len(ks) // 4) :]
    slope = float(np.polyfit(tail, [kappa[k] for k in tail], 1)[0]) if len(tail) >= 2 else 0.0
    return ExponentReport(kappa, max(kappa.values()), slope)


def _log(q: int) -> float:
    # float(q) overflows for huge q; go through the bit length
    b = q.bit_length()
    if b < 1000:
        return math.log(q)
    return math.log(q >> (b - 64)) + (b - 64) * math.log(2)


# Roy's statistic -------------------------------------------------------------


def roy_xi(A: int, B: int) -> ContinuedFractionSource:
    """xi = [0; A, B, A, A, B, ...], the Fibonacci word with a -> A and b -> B."""
    return ContinuedFractionSource(cf_from_word(fibonacci_word(), A, B))


@dataclass(frozen=True)
class RoyRow:
    X: int
    x0: int
    x1: int
    x2: int
    delta: float  # min over 1 <= x0 <= X of max(|x0 xi - x1|, |x0 xi^2 - x2|)
    s: float  # delta * X^(1/Phi)


@dataclass
class RoyReport:
    A: int
    B: int
    bits: int
    rows: list[RoyRow] = field(default_factory=list)

    @property
    def c_emp(self) -> float:
        return max(r.s for r in self.rows)

    def bounded_by(self, c: float) -> bool:
        return all(r.s <= c for r in self.rows)


def log_grid(lo: int, hi: int, points: int) -> list[int]:
    return sorted({int(round(v)) for v in np.geomspace(lo, hi, points)})


def roy_check(A: int, B: int, X_grid: Iterable[int], precision: int | None = None) -> RoyReport:
    """Exhaustive search for the best x_0 <= X, at every X of the grid.

    xi and xi^2 are held as W-bit fixed-point integers with
    W >= 2 log2(max X) + 64, so |x0 xi - x1| is exact to well below 2^-64.
    """
    grid = sorted(set(int(X) for X in X_grid))
    if not grid or grid[0] < 1:
        raise ValueError("grid must contain positive integers")
    Xmax = grid[-1]
    need = 2 * Xmax.bit_length() + 64
    W = need if precision is None else precision
    if W < need:
        raise PrecisionError(f"precision {W} below the {need} bits needed for X = {Xmax}")
    src = roy_xi(A, B)
    lo, hi = src.bounds(W + 8)
    xi = (lo + hi) >> 9  # xi * 2^W, error below 2^-W * (1 + 2^-8)
    xi2 = (xi * xi) >> W
    one, half = 1 << W, 1 << (W - 1)
    best = (None, 0, 0, 0)
    out = RoyReport(A, B, W)
    gi = 0
    for x0 in range(1, Xmax + 1):
        u, v = x0 * xi, x0 * xi2
        x1, r1 = divmod(u + half, one)
        x2, r2 = divmod(v + half, one)
        d = max(abs(r1 - half), abs(r2 - half))
        if best[0] is None or d < best[0]:
            best = (d, x0, x1, x2)
        while gi < len(grid) and grid[gi] == x0:
            delta = best[0] / one
            out.rows.append(RoyRow(x0, best[1], best[2], best[3], delta, delta * x0**INV_PHI))
            gi += 1
    return out
