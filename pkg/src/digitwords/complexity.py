"""Subword complexity, Sturmian checks, letter frequencies and repetition census.

Everything here works on a finite prefix of an infinite word, so the numbers
are horizon-bounded: ``p_N(m)`` counts the distinct length-m factors of the
first N symbols and is a lower bound for the true complexity ``p(m)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

import numpy as np

from .words import Alphabet, Word, WordStream

WordLike = Union[WordStream, Word]

_INT64_LIMIT = 1 << 62


def _materialize(w: WordLike, n: int | None) -> tuple[bytes, Alphabet]:
    if isinstance(w, Word):
        data = w.symbols if n is None else w.symbols[:n]
        if n is not None and len(data) < n:
            raise ValueError(f"word has only {len(w)} symbols, horizon {n} requested")
        return data, w.alphabet
    if n is None:
        raise ValueError("a horizon is required for infinite words")
    return w.symbols(n), w.alphabet


def _factor_codes(arr: np.ndarray, m: int, g: int) -> np.ndarray:
    """Exact integer code of every length-m window (requires g**m < 2**62)."""
    n = len(arr) - m + 1
    codes = arr[:n].astype(np.int64)
    for j in range(1, m):
        codes = codes * g + arr[j : j + n]
    return codes


def distinct_factors(data: bytes, m: int, g: int) -> int:
    if m > len(data):
        return 0
    if g**m < _INT64_LIMIT:
        arr = np.frombuffer(data, dtype=np.uint8).astype(np.int64)
        return int(np.unique(_factor_codes(arr, m, g)).size)
    # hashed slices; set membership compares the bytes on collision
    return len({data[i : i + m] for i in range(len(data) - m + 1)})


@dataclass(frozen=True)
class ComplexityProfile:
    horizon: int
    alphabet_size: int
    counts: tuple[int, ...]  # counts[m - 1] = p_N(m)

    def __getitem__(self, m: int) -> int:
        if m < 1:
            raise IndexError("complexity is defined for m >= 1")
        return self.counts[m - 1]

    @property
    def max_m(self) -> int:
        return len(self.counts)

    def as_dict(self) -> dict[int, int]:
        return {m: p for m, p in enumerate(self.counts, start=1)}


def complexity(w: WordLike, max_m: int, horizon: int) -> ComplexityProfile:
    """p_N(m) for 1 <= m <= max_m, N = horizon."""
    if max_m > horizon:
        raise ValueError("max_m must not exceed the horizon")
    data, alphabet = _materialize(w, horizon)
    g = len(alphabet)
    return ComplexityProfile(horizon, g, tuple(distinct_factors(data, m, g) for m in range(1, max_m + 1)))


def right_special_factors(data: bytes, m: int, g: int, alphabet: Alphabet) -> list[str]:
    """Length-m factors v such that va and vb are both factors, for two letters a != b."""
    if g ** (m + 1) < _INT64_LIMIT:
        arr = np.frombuffer(data, dtype=np.uint8).astype(np.int64)
        codes = np.unique(_factor_codes(arr, m + 1, g))
        stems, counts = np.unique(codes // g, return_counts=True)
        special = stems[counts >= 2]
        out = []
        for code in special.tolist():
            digits = []
            for _ in range(m):
                code, d = divmod(code, g)
                digits.append(d)
            out.append(alphabet.decode(reversed(digits)))
        return sorted(out)
    ext: dict[bytes, set[int]] = {}
    for i in range(len(data) - m):
        ext.setdefault(data[i : i + m], set()).add(data[i + m])
    return sorted(alphabet.decode(v) for v, s in ext.items() if len(s) >= 2)


@dataclass(frozen=True)
class SturmianCensus:
    is_sturmian: bool
    profile: ComplexityProfile
    right_special: dict[int, list[str]]
    # first m with p_N(m) != m + 1, if any
    witness: int | None = None


def is_sturmian_up_to(w: WordLike, max_m: int, horizon: int) -> SturmianCensus:
    data, alphabet = _materialize(w, horizon)
    if len(alphabet) != 2:
        raise ValueError("Sturmian words live on a two-letter alphabet")
    prof = complexity(w, max_m, horizon)
    witness = next((m for m in range(1, max_m + 1) if prof[m] != m + 1), None)
    special = {m: right_special_factors(data, m, 2, alphabet) for m in range(1, max_m + 1)}
    return SturmianCensus(witness is None, prof, special, witness)


def letter_frequency(w: WordLike, horizon: int) -> dict[str, Fraction]:
    if horizon < 1:
        raise ValueError("horizon must be positive")
    data, alphabet = _materialize(w, horizon)
    counts = np.bincount(np.frombuffer(data, dtype=np.uint8), minlength=len(alphabet))
    return {x: Fraction(int(c), horizon) for x, c in zip(alphabet.letters, counts)}


# repetitions ---------------------------------------------------------------

PATTERN_KINDS = ("square", "overlap", "w_power", "palindrome")


@dataclass(frozen=True)
class PatternHit:
    kind: str
    start: int
    length: int
    root: int | None = None  # |W| for repetitions

    def text(self, w: WordLike) -> str:
        data, alphabet = _materialize(w, self.start + self.length)
        return alphabet.decode(data[self.start : self.start + self.length])


def power_length(w: Fraction, root: int) -> int:
    """Length of W^floor(w) W' with |W| = root and |W'| = ceil((w - floor(w)) |W|)."""
    w = Fraction(w)
    whole = math.floor(w)
    return whole * root + math.ceil((w - whole) * root)


def _periodic_windows(arr: np.ndarray, root: int, total: int) -> np.ndarray:
    """Starts i with arr[i:i+total] having period ``root``."""
    n = len(arr)
    if total > n:
        return np.empty(0, dtype=np.int64)
    eq = (arr[:-root] == arr[root:]).astype(np.int64)
    r = total - root
    cs = np.concatenate(([0], np.cumsum(eq)))
    win = cs[r:] - cs[:-r]
    return np.flatnonzero(win[: n - total + 1] == r)


def _maximal_palindromes(data: bytes, min_length: int) -> list[tuple[int, int]]:
    # Manacher on the interleaved string; returns (start, length) per center
    t = [-1]
    for s in data:
        t += [s, -1]
    n = len(t)
    rad = [0] * n
    c = r = 0
    for i in range(n):
        k = min(rad[2 * c - i], r - i) if i < r else 0
        while i - k - 1 >= 0 and i + k + 1 < n and t[i - k - 1] == t[i + k + 1]:
            k += 1
        rad[i] = k
        if i + k > r:
            c, r = i, i + k
    out = []
    for i, k in enumerate(rad):
        if k >= min_length:
            out.append(((i - k) // 2, k))
    return out


def find_patterns(
    w: WordLike,
    kind: str,
    horizon: int | None = None,
    power: Fraction | str | None = None,
    max_root: int | None = None,
    min_length: int = 2,
) -> list[PatternHit]:
    """All occurrences of a repetition pattern inside the first ``horizon`` symbols.

    ``square``: XX.  ``overlap``: xXxXx, i.e. a factor of length 2L+1 with
    period L.  ``w_power``: W^floor(w) W' for rational ``power`` > 1.  Every
    (start, |W|) pair is reported.  ``palindrome`` reports the maximal
    palindrome around each center, of length at least ``min_length``.
    """
    data, _ = _materialize(w, horizon)
    n = len(data)
    if kind == "palindrome":
        return [PatternHit("palindrome", s, k) for s, k in _maximal_palindromes(data, min_length)]
    if kind == "square":
        total = lambda L: 2 * L  # noqa: E731
    elif kind == "overlap":
        total = lambda L: 2 * L + 1  # noqa: E731
    elif kind == "w_power":
        if power is None:
            raise ValueError("w_power needs an exponent")
        power = Fraction(power)
        if power <= 1:
            raise ValueError("the exponent of a w-power must exceed 1")
        total = lambda L: power_length(power, L)  # noqa: E731
    else:
        raise ValueError(f"unknown pattern kind {kind!r}; choose from {PATTERN_KINDS}")
    arr = np.frombuffer(data, dtype=np.uint8)
    hits = []
    top = n // 2 if max_root is None else min(max_root, n - 1)
    for L in range(1, top + 1):
        T = total(L)
        if T > n:
            break
        for s in _periodic_windows(arr, L, T).tolist():
            hits.append(PatternHit(kind, s, T, L))
    hits.sort(key=lambda h: (h.start, h.root))
    return hits


# periodicity -----------------------------------------------------------------


@dataclass(frozen=True)
class PeriodReport:
    start: int  # length of the preperiod
    period: int
    horizon: int


def eventual_period(seq, max_period: int | None = None, min_repeats: int = 2) -> PeriodReport | None:
    """Preperiod and period explaining the whole finite sequence, minimizing start + period.

    The periodic part must repeat at least ``min_repeats`` times inside the
    sequence, otherwise the answer would be vacuous.
    """
    arr = np.asarray(bytearray(seq) if isinstance(seq, (bytes, bytearray)) else seq)
    n = len(arr)
    top = n // min_repeats if max_period is None else min(max_period, n // min_repeats)
    best = None
    for P in range(1, top + 1):
        if best is not None and P >= best[0]:
            break  # start + P can no longer improve
        bad = np.flatnonzero(arr[:-P] != arr[P:])
        start = int(bad[-1]) + 1 if bad.size else 0
        if n - start >= min_repeats * P and (best is None or start + P < best[0]):
            best = (start + P, start, P)
    return None if best is None else PeriodReport(best[1], best[2], n)


def detect_period(w: WordLike, max_m: int, horizon: int) -> PeriodReport | None:
    """Use p_N(m+1) = p_N(m) as a periodicity witness, then find the period.

    Returns None if the complexity keeps growing over 1..max_m.
    """
    prof = complexity(w, max_m, horizon)
    for m in range(1, max_m):
        if prof[m + 1] == prof[m]:
            data, _ = _materialize(w, horizon)
            return eventual_period(data, max_period=prof[m])
    return None


def fit_linear_bound(profile: ComplexityProfile) -> float:
    """Smallest C with p_N(m) <= C m over the profile."""
    return max(p / m for m, p in profile.as_dict().items())


def fit_quadratic(profile: ComplexityProfile, m_min: int = 1) -> tuple[np.ndarray, float]:
    """Least-squares quadratic in m and its coefficient of determination."""
    ms = np.arange(m_min, profile.max_m + 1, dtype=float)
    ps = np.array(profile.counts[m_min - 1 :], dtype=float)
    coef = np.polyfit(ms, ps, 2)
    resid = ps - np.polyval(coef, ms)
    ss_tot = float(((ps - ps.mean()) ** 2).sum())
    r2 = 1.0 - float((resid**2).sum()) / ss_tot if ss_tot else 1.0
    return coef, r2


@dataclass(frozen=True)
class GrowthRow:
    m: int
    p: int
    ratio: float  # p / m
    log_ratio: float | None  # p / (m (log m)^eta); undefined at m = 1


@dataclass
class GrowthReport:
    base: int
    horizon: int
    eta: float
    rows: list[GrowthRow] = field(default_factory=list)


def complexity_growth_report(source, g: int, max_m: int, horizon: int, eta: float = 1 / 11) -> GrowthReport:
    """p_N(m)/m and p_N(m)/(m (log m)^eta) for the base-g digits of a real number.

    ``source`` is a RealSource or any word; this is an empirical probe only.
    """
    if isinstance(source, (Word, WordStream)):
        w = source
    else:
        w = source.digits(g, horizon)
    prof = complexity(w, max_m, horizon)
    report = GrowthReport(g, horizon, eta)
    for m, p in prof.as_dict().items():
        log_ratio = None if m == 1 else p / (m * math.log(m) ** eta)
        report.rows.append(GrowthRow(m, p, p / m, log_ratio))
    return report
