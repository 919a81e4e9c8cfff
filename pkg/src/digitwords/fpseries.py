"""Truncated power series over F_p or Z, the PTM algebraic identity and Mahler's product."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .complexity import PeriodReport, eventual_period


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p**0.5) + 1))


@dataclass(frozen=True)
class TruncatedSeries:
    """c_0 + c_1 X + ... + c_{N-1} X^{N-1}  (mod X^N).

    ``modulus`` is a prime p for F_p, or 0 for the integers.
    """

    modulus: int
    order: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("truncation order must be positive")
        if self.modulus and not _is_prime(self.modulus):
            raise ValueError(f"{self.modulus} is not prime")
        c = list(self.coeffs[: self.order]) + [0] * max(0, self.order - len(self.coeffs))
        if self.modulus:
            c = [x % self.modulus for x in c]
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def of(cls, coeffs, order: int, modulus: int = 0) -> "TruncatedSeries":
        return cls(modulus, order, tuple(int(c) for c in coeffs))

    @classmethod
    def one(cls, order: int, modulus: int = 0) -> "TruncatedSeries":
        return cls(modulus, order, (1,))

    @property
    def ring(self) -> str:
        return f"F_{self.modulus}" if self.modulus else "Z"

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i]

    def _check(self, other: "TruncatedSeries") -> int:
        if self.modulus != other.modulus:
            raise ValueError(f"ring mismatch: {self.ring} vs {other.ring}")
        return min(self.order, other.order)

    def _coerce(self, other) -> "TruncatedSeries":
        if isinstance(other, int):
            return TruncatedSeries(self.modulus, self.order, (other,))
        return other

    def __add__(self, other):
        other = self._coerce(other)
        N = self._check(other)
        return TruncatedSeries(self.modulus, N, tuple(a + b for a, b in zip(self.coeffs[:N], other.coeffs[:N])))

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(self.modulus, self.order, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __mul__(self, other):
        other = self._coerce(other)
        N = self._check(other)
        if self.modulus and self.modulus < 1 << 20 and N <= 1 << 16:
            # exact in int64: each partial product < 2^40, at most 2^16 of them
            a = np.array(self.coeffs[:N], dtype=np.int64)
            b = np.array(other.coeffs[:N], dtype=np.int64)
            prod = np.convolve(a, b)[:N]
        else:
            prod = _sparse_convolve(self.coeffs[:N], other.coeffs[:N], N)
        return TruncatedSeries(self.modulus, N, tuple(int(x) for x in prod))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not supported")
        out = TruncatedSeries.one(self.order, self.modulus)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        N = self._check(other)
        return self.coeffs[:N] == other.coeffs[:N]

    def __hash__(self):
        return hash((self.modulus, self.order, self.coeffs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def dilate(self, k: int) -> "TruncatedSeries":
        """f(X^k) mod X^N."""
        c = [0] * self.order
        for i, x in enumerate(self.coeffs):
            if i * k >= self.order:
                break
            c[i * k] = x
        return TruncatedSeries(self.modulus, self.order, tuple(c))

    def __str__(self) -> str:
        parts = []
        for i, c in enumerate(self.coeffs):
            if c:
                mono = "" if i == 0 else ("X" if i == 1 else f"X^{i}")
                coef = str(c) if (c != 1 or i == 0) else ""
                parts.append(coef + mono)
        return (" + ".join(parts) or "0") + f" + O(X^{self.order})"


def _sparse_convolve(a, b, N) -> list[int]:
    out = [0] * N
    nz_b = [(j, y) for j, y in enumerate(b) if y]
    for i, x in enumerate(a):
        if x:
            for j, y in nz_b:
                if i + j >= N:
                    break
                out[i + j] += x * y
    return out


def series_add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a + b


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a * b


def series_pow(a: TruncatedSeries, k: int) -> TruncatedSeries:
    return a**k


def _ptm_bits(N: int) -> list[int]:
    from .automata import builtin, word_of

    return list(word_of(builtin("ptm")).symbols(N))


def ptm_series(N: int) -> TruncatedSeries:
    """F(X) = sum a_n X^n over F_2, a the Prouhet-Thue-Morse sequence."""
    if N < 1:
        raise ValueError("N must be positive")
    return TruncatedSeries(2, N, tuple(_ptm_bits(N)))


def verify_ptm_cubic(N: int) -> bool:
    """(1+X)^3 F^2 + (1+X)^2 F + X == 0 mod X^N over F_2."""
    if N < 4:
        raise ValueError("N must be at least 4")
    F = ptm_series(N)
    one_x = TruncatedSeries.of([1, 1], N, 2)
    X = TruncatedSeries.of([0, 1], N, 2)
    return (one_x**3 * F * F + one_x**2 * F + X).is_zero()


def mahler_product(N: int) -> TruncatedSeries:
    """prod_{n>=0} (1 - z^{2^n}) mod z^N over Z, multiplied sparse factor by factor."""
    if N < 1:
        raise ValueError("N must be positive")
    c = [0] * N
    c[0] = 1
    e = 1
    while e < N:
        # multiply by (1 - z^e) in place, top down
        for i in range(N - 1, e - 1, -1):
            c[i] -= c[i - e]
        e <<= 1
    return TruncatedSeries(0, N, tuple(c))


def mahler_functional_equation_holds(N: int) -> bool:
    """f(z) - (1 - z) f(z^2) == 0 mod z^N."""
    f = mahler_product(N)
    return (f - TruncatedSeries.of([1, -1], N) * f.dilate(2)).is_zero()


def rational_series_period(s: TruncatedSeries, min_repeats: int = 3) -> PeriodReport | None:
    """Ultimately periodic coefficient pattern, if one explains the whole truncation.

    Over F_p such a series is rational, P(X)/(1 - X^period) up to a polynomial;
    detection is limited to the stored horizon.
    """
    return eventual_period(list(s.coeffs), min_repeats=min_repeats)
