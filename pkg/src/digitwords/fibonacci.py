"""Fibonacci numbers, Zeckendorf representation, rabbits and Beatty sequences."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import isqrt

from .words import Alphabet, WordStream


def fib(n: int) -> int:
    """F_n with F_0 = 0, F_1 = 1 (fast doubling)."""
    if n < 0:
        raise ValueError("n must be non-negative")

    def pair(k: int) -> tuple[int, int]:
        if k == 0:
            return 0, 1
        a, b = pair(k >> 1)
        c = a * (2 * b - a)
        d = a * a + b * b
        return (d, c + d) if k & 1 else (c, d)

    return pair(n)[0]


@lru_cache(maxsize=None)
def _fib_table(limit: int) -> tuple[int, ...]:
    # F_0..F_k with F_k > limit
    table = [0, 1]
    while table[-1] <= limit:
        table.append(table[-1] + table[-2])
    return tuple(table)


@dataclass(frozen=True)
class Zeckendorf:
    n: int
    indices: tuple[int, ...]  # strictly decreasing, all >= 2, no two consecutive

    def __post_init__(self):
        ks = self.indices
        if any(k < 2 for k in ks):
            raise ValueError("Zeckendorf indices start at 2")
        if any(a - b < 2 for a, b in zip(ks, ks[1:])):
            raise ValueError("indices must be decreasing and non-consecutive")
        if sum(fib(k) for k in ks) != self.n:
            raise ValueError("indices do not sum to n")

    @property
    def smallest(self) -> int:
        return self.indices[-1]


def zeckendorf(n: int) -> Zeckendorf:
    """Greedy decomposition of n >= 1 into non-consecutive Fibonacci numbers F_k, k >= 2."""
    if n < 1:
        raise ValueError("n must be positive")
    table = _fib_table(max(n, 1024))
    k = len(table) - 1
    while table[k] > n:
        k -= 1
    out = []
    rest = n
    while rest:
        if table[k] <= rest:
            out.append(k)
            rest -= table[k]
            k -= 2
        else:
            k -= 1
    return Zeckendorf(n, tuple(out))


def rabbit(n: int) -> str:
    """R_n (n >= 1): 'A' if the smallest Zeckendorf index of n is even, else 'Y'."""
    return "A" if zeckendorf(n).smallest % 2 == 0 else "Y"


def rabbit_generations(k: int) -> list[str]:
    """Y, A, AY, AYA, ... under Y -> A, A -> AY."""
    gens = ["Y"]
    for _ in range(k - 1):
        gens.append("".join("AY" if c == "A" else "A" for c in gens[-1]))
    return gens


def floor_k_phi(k: int) -> int:
    """floor(k * Phi) computed exactly: floor((k + sqrt(5 k^2)) / 2)."""
    if k < 0:
        raise ValueError("k must be non-negative")
    return (k + isqrt(5 * k * k)) // 2


def beatty_indices(kind: str, count: int) -> list[int]:
    """floor(k Phi) or floor(k Phi^2) for k = 1..count."""
    if count < 1:
        raise ValueError("count must be positive")
    if kind in ("phi", "Φ"):
        return [floor_k_phi(k) for k in range(1, count + 1)]
    if kind in ("phi2", "phi^2", "Φ²"):
        # Phi^2 = Phi + 1
        return [floor_k_phi(k) + k for k in range(1, count + 1)]
    raise ValueError(f"unknown Beatty kind {kind!r}; use 'phi' or 'phi2'")


def danilov_stream() -> WordStream:
    """(v_n)_{n>=0} = 0,1,0,0,1,...: v_n = 0 if R_{n+1} = A and 1 if R_{n+1} = Y."""
    return WordStream.from_function(Alphabet(("0", "1")), lambda n: 0 if rabbit(n + 1) == "A" else 1, name="danilov")
