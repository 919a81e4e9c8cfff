"""BBP numbers sum_n p(n)/q(n) g^{-n}: evaluation, digit extraction, Hypothesis A orbits.

A spec is stored both as a reduced rational function p/q (integer
coefficients, ascending powers of n) and, when available, as a list of
single-power terms c/(k n + m), which is the form digit extraction needs.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from pathlib import Path

import numpy as np

from .reals import PrecisionError, RealSource, int_to_digits
from .words import Alphabet, Word

Poly = tuple[int, ...]  # ascending coefficients


# tiny exact polynomial toolkit ------------------------------------------------


def _trim(a: list) -> list:
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return a


def _pmul(a, b) -> list:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _trim(out)


def _padd(a, b) -> list:
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def _pdivmod(a, b) -> tuple[list, list]:
    a = [Fraction(x) for x in a]
    b = [Fraction(x) for x in b]
    q = [Fraction(0)] * max(1, len(a) - len(b) + 1)
    while len(a) >= len(b) and any(a):
        shift = len(a) - len(b)
        f = a[-1] / b[-1]
        q[shift] = f
        for i, y in enumerate(b):
            a[i + shift] -= f * y
        a.pop()
        _trim(a)
        if len(a) < len(b):
            break
    return _trim(q), _trim(a or [Fraction(0)])


def _pgcd(a, b) -> list:
    a, b = [Fraction(x) for x in a], [Fraction(x) for x in b]
    while any(b):
        _, r = _pdivmod(a, b)
        a, b = b, r
    return [x / a[-1] for x in a]


def _integerize(a) -> list[int]:
    den = reduce(math.lcm, (Fraction(x).denominator for x in a), 1)
    ints = [int(Fraction(x) * den) for x in a]
    g = reduce(math.gcd, ints, 0) or 1
    return [x // g for x in ints]


def peval(a, n):
    v = 0
    for c in reversed(a):
        v = v * n + c
    return v


# specs ------------------------------------------------------------------------


@dataclass(frozen=True)
class Term:
    c: int
    k: int
    m: int  # contributes c / (k n + m)


@dataclass(frozen=True)
class BbpSpec:
    name: str
    g: int
    p: Poly
    q: Poly
    start: int = 1
    terms: tuple[Term, ...] = ()
    formula: bool = True  # False: value taken from an independent constant

    def __post_init__(self):
        if self.g < 2:
            raise ValueError("base must be at least 2")
        if not self.formula:
            return
        if len(self.p) >= len(self.q) or not any(self.p) and len(self.q) == 1:
            raise ValueError("need deg p < deg q")
        for n in range(self.start, max(self.start, self.root_bound()) + 1):
            if peval(self.q, n) == 0:
                raise ValueError(f"q vanishes at n = {n}")

    def root_bound(self) -> int:
        """Cauchy bound: every real root of q has |r| < 1 + max |q_i / q_lead|."""
        lead = abs(self.q[-1])
        return 1 + math.ceil(max(Fraction(abs(c), lead) for c in self.q[:-1])) if len(self.q) > 1 else 0

    def R(self, n: int) -> Fraction:
        return Fraction(peval(self.p, n), peval(self.q, n))

    @classmethod
    def from_terms(cls, name: str, g: int, terms, start: int = 1) -> "BbpSpec":
        terms = tuple(t if isinstance(t, Term) else Term(*t) for t in terms)
        if not terms:
            raise ValueError("empty term list")
        for t in terms:
            if t.k <= 0:
                raise ValueError("each term needs k > 0")
            if t.k * start + t.m <= 0:
                raise ValueError("term denominators must be positive for n >= start")
        q: list = [1]
        for t in terms:
            q = _pmul(q, [t.m, t.k])
        p: list = [0]
        for t in terms:
            others, _ = _pdivmod(q, [t.m, t.k])
            p = _padd(p, [t.c * x for x in others])
        # cancel common factors, then clear denominators jointly
        d = _pgcd(p, q)
        p, _ = _pdivmod(p, d)
        q, _ = _pdivmod(q, d)
        den = reduce(math.lcm, (Fraction(x).denominator for x in list(p) + list(q)), 1)
        p = [int(x * den) for x in p]
        q = [int(x * den) for x in q]
        cont = reduce(math.gcd, p + q, 0) or 1
        sign = -1 if q[-1] < 0 else 1
        p = tuple(sign * x // cont for x in p)
        q = tuple(sign * x // cont for x in q)
        return cls(name, g, p, q, start, terms)

    @classmethod
    def from_polys(cls, name: str, g: int, p, q, start: int = 1) -> "BbpSpec":
        d = _pgcd(p, q)
        pr, _ = _pdivmod(p, d)
        qr, _ = _pdivmod(q, d)
        both = _integerize(list(pr) + list(qr))
        p2, q2 = both[: len(pr)], both[len(pr) :]
        if q2[-1] < 0:
            p2, q2 = [-x for x in p2], [-x for x in q2]
        return cls(name, g, tuple(p2), tuple(q2), start)

    @classmethod
    def from_json(cls, text: str, name: str = "custom") -> "BbpSpec":
        """``{g, start?, terms: [{c, k, m}]}`` or ``{g, start?, p: [...], q: [...]}`` (ascending)."""
        data = json.loads(text)
        start = int(data.get("start", 1))
        if "terms" in data:
            return cls.from_terms(data.get("name", name), int(data["g"]), [Term(int(t["c"]), int(t["k"]), int(t["m"])) for t in data["terms"]], start)
        return cls.from_polys(data.get("name", name), int(data["g"]), data["p"], data["q"], start)

    def to_json(self) -> str:
        out = {"name": self.name, "g": self.g, "start": self.start}
        if self.terms:
            out["terms"] = [{"c": t.c, "k": t.k, "m": t.m} for t in self.terms]
        else:
            out["p"], out["q"] = list(self.p), list(self.q)
        return json.dumps(out)


# formula-less catalog entries are evaluated from mpmath constants
_CONSTANTS = {
    "pi2_64": (64, lambda mp: mp.pi**2),
    "pi2_81": (81, lambda mp: mp.pi**2),
    "log2sq_64": (64, lambda mp: mp.log(2) ** 2),
    "zeta3_4096": (4096, lambda mp: mp.zeta(3)),
}

CATALOG = {
    "log2_2": lambda: BbpSpec.from_terms("log2_2", 2, [Term(1, 1, 0)], start=1),
    "log2_9": lambda: BbpSpec.from_terms("log2_9", 9, [Term(6, 2, -1)], start=1),
    "log3_4": lambda: BbpSpec.from_terms("log3_4", 4, [Term(1, 2, 1)], start=0),
    "pi16": lambda: BbpSpec.from_terms("pi16", 16, [Term(4, 8, 1), Term(-2, 8, 4), Term(-1, 8, 5), Term(-1, 8, 6)], start=0),
}
for _name, (_g, _) in _CONSTANTS.items():
    CATALOG[_name] = (lambda n=_name, g=_g: BbpSpec(n, g, (), (), formula=False))


def spec_by_name(name: str) -> BbpSpec:
    """A catalog entry, or a path to a JSON spec file."""
    if name in CATALOG:
        return CATALOG[name]()
    path = Path(name)
    if path.suffix == ".json" and path.exists():
        return BbpSpec.from_json(path.read_text(), name=path.stem)
    raise ValueError(f"unknown BBP spec {name!r}; choose from {sorted(CATALOG)} or a .json file")


# evaluation -----------------------------------------------------------------


class BbpSource(RealSource):
    def __init__(self, spec: BbpSpec):
        self.spec = spec
        self.descriptor = f"bbp:{spec.name}"
        if spec.formula:
            s = spec
            self._N0 = max(s.start, 2 * s.root_bound() + 1)
            # for n >= N0: |R(n)| <= C, see tail_bound
            self._C = Fraction(sum(abs(c) for c in s.p) * 2 ** (len(s.q) - 1), abs(s.q[-1]))

    def tail_bound(self, M: int) -> Fraction:
        """Upper bound for |sum_{n > M} R(n) g^{-n}| (requires M >= N0 - 1)."""
        if M + 1 < self._N0:
            raise ValueError("tail bound only valid past the root bound")
        g = self.spec.g
        return self._C / (g**M * (g - 1))

    def bounds(self, prec):
        s = self.spec
        if not s.formula:
            return self._constant_bounds(prec)
        g = s.g
        lg = math.log2(g)
        M = max(self._N0, math.ceil((prec + 8 + math.log2(float(self._C) + 1)) / lg))
        P = prec + 8 + max(1, (M + 1).bit_length())
        S = 0
        # g^{-n} / 1 in fixed point, exact per term up to one floor
        for n in range(s.start, M + 1):
            S += (peval(s.p, n) << P) // (peval(s.q, n) * g**n)
        err = (M - s.start + 1) + math.ceil(self.tail_bound(M) * 2**P) + 1
        shift = P - prec
        return (S - err) >> shift, -((-(S + err)) >> shift)

    def _constant_bounds(self, prec):
        import mpmath

        with mpmath.workprec(prec + 32):
            v = _CONSTANTS[self.spec.name][1](mpmath)
            scaled = int(mpmath.floor(v * mpmath.mpf(2) ** prec))
        return scaled - 2, scaled + 2


def eval_spec(spec: BbpSpec) -> BbpSource:
    return BbpSource(spec)


# digit extraction --------------------------------------------------------------


def extract_digits(spec: BbpSpec, d: int, k: int, bits: int = 128, max_bits: int = 1 << 16) -> Word:
    """Base-g digits d .. d+k-1 of the fractional part, without computing the earlier ones.

    frac(g^{d-1} theta) is accumulated from (c * g^{d-1-n} mod (kn+m)) / (kn+m)
    for n < d plus a short tail, in ``bits``-bit fixed point with a rigorous
    error count; the precision is doubled when the enclosure straddles a
    digit boundary.
    """
    if not spec.terms:
        raise ValueError(f"{spec.name}: extraction needs the single-power term form")
    if d < 1 or k < 0:
        raise ValueError("need d >= 1 and k >= 0")
    g = spec.g
    alphabet = Alphabet.digits(g)
    if k == 0:
        return Word(alphabet, b"")
    e = d - 1
    P = bits + math.ceil(k * math.log2(g))
    while P <= max_bits:
        one = 1 << P
        S = 0
        nterms = 0
        for t in spec.terms:
            for n in range(spec.start, e + 1):
                den = t.k * n + t.m
                r = (t.c * pow(g, e - n, den)) % den
                S += (r << P) // den
                nterms += 1
            n = e + 1
            scale = g
            while True:
                den = t.k * n + t.m
                term = (t.c << P) // (den * scale)
                S += term
                nterms += 1
                if abs(t.c) * one < den * scale:  # term magnitude now below one unit
                    break
                n += 1
                scale *= g
        # each floor is off by < 1 unit, the neglected tail by < 2 units per term
        err = nterms + 2 * len(spec.terms) + 1
        lo = (S - err) % one
        hi = lo + 2 * err
        gk = g**k
        a, b = (lo * gk) >> P, (hi * gk) >> P
        if a == b and hi < one:
            return Word(alphabet, int_to_digits(a, g, k))
        P *= 2
    raise PrecisionError(f"{spec.name}: extraction at position {d} not certified below {max_bits} bits")


# Hypothesis A ------------------------------------------------------------------


@dataclass
class Orbit:
    spec_name: str
    g: int
    bits: int
    values: np.ndarray  # y_0 .. y_N as floats (truncated towards 0, hence in [0, 1))
    fixed: list[int] = field(repr=False, default_factory=list)  # y_n * 2^bits, same indexing


def hypothesis_a_orbit(spec: BbpSpec, N: int, guard_bits: int = 64) -> Orbit:
    """y_0 = 0 and y_n = g y_{n-1} + R(start + n - 1) mod 1 for n = 1..N.

    With start = 1 this is y_1 = R(1), y_2 = g y_1 + R(2), ...  Up to the series
    tail, y_n equals the fractional part of g^{start + n - 1} theta.  The
    fixed-point width N log2(g) + guard_bits + log2(N) keeps >= guard_bits
    correct bits in every y_n despite the factor g per step.
    """
    if N < 1:
        raise ValueError("N must be at least 1")
    if not spec.formula:
        raise ValueError(f"{spec.name}: no rational function available")
    g = spec.g
    W = math.ceil(N * math.log2(g)) + guard_bits + N.bit_length() + 2
    mask = (1 << W) - 1
    y = 0
    fixed = [0]
    for n in range(1, N + 1):
        j = spec.start + n - 1
        y = (g * y + (peval(spec.p, j) << W) // peval(spec.q, j)) & mask
        fixed.append(y)
    vals = np.array([(v >> (W - 53)) / float(1 << 53) for v in fixed])
    return Orbit(spec.name, g, W, vals, fixed)


def discrepancy(points) -> float:
    """Star discrepancy D*_N = max_i max(i/N - x_(i), x_(i) - (i-1)/N) over the sorted points."""
    x = np.sort(np.asarray(points, dtype=float))
    N = x.size
    if N == 0:
        raise ValueError("need at least one point")
    if x[0] < 0 or x[-1] >= 1:
        raise ValueError("points must lie in [0, 1)")
    i = np.arange(1, N + 1)
    return float(max((i / N - x).max(), (x - (i - 1) / N).max()))
