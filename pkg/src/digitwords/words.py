"""Alphabets, finite words, lazy infinite words and morphisms.

Symbols are stored as small integers (one byte each); an :class:`Alphabet`
maps them back to display glyphs.  Infinite words are :class:`WordStream`
objects that materialize a memoized prefix on demand.
"""

from __future__ import annotations

import json
import warnings
from collections import Counter
from dataclasses import dataclass
from itertools import islice
from typing import Iterable, Iterator, Mapping, Sequence

_GLYPHS = "0123456789abcdefghijklmnopqrstuvwxyz"

#: depth up to which the non-erasing condition of a fixed point is checked
FIXED_POINT_CHECK_DEPTH = 64


@dataclass(frozen=True)
class Alphabet:
    letters: tuple[str, ...]

    def __post_init__(self):
        letters = tuple(str(x) for x in self.letters)
        object.__setattr__(self, "letters", letters)
        if not letters:
            raise ValueError("alphabet must have at least one letter")
        if len(set(letters)) != len(letters):
            raise ValueError(f"duplicate letters in alphabet {letters!r}")
        if len(letters) > 256:
            raise ValueError("alphabets are limited to 256 letters")
        if any(not x for x in letters):
            raise ValueError("empty glyph in alphabet")

    @classmethod
    def of(cls, letters: Iterable[str] | str) -> "Alphabet":
        return cls(tuple(letters))

    @classmethod
    def digits(cls, g: int) -> "Alphabet":
        """Digit alphabet {0..g-1}; glyphs 0-9a-z up to base 36, decimal strings beyond."""
        if g < 2:
            raise ValueError("base must be at least 2")
        if g <= len(_GLYPHS):
            return cls(tuple(_GLYPHS[:g]))
        return cls(tuple(str(d) for d in range(g)))

    def __len__(self) -> int:
        return len(self.letters)

    def __contains__(self, letter) -> bool:
        return letter in self._index

    @property
    def _index(self) -> dict[str, int]:
        # cached lazily; dataclass is frozen so go through __dict__
        idx = self.__dict__.get("_idx")
        if idx is None:
            idx = {x: i for i, x in enumerate(self.letters)}
            object.__setattr__(self, "_idx", idx)
        return idx

    @property
    def single_char(self) -> bool:
        return all(len(x) == 1 for x in self.letters)

    def index(self, letter: str) -> int:
        try:
            return self._index[letter]
        except KeyError:
            raise ValueError(f"letter {letter!r} not in alphabet {self.letters!r}") from None

    def encode(self, text: str | Iterable[str]) -> bytes:
        if isinstance(text, str) and not self.single_char:
            text = text.split(",") if text else []
        return bytes(self.index(x) for x in text)

    def decode(self, symbols: Iterable[int]) -> str:
        sep = "" if self.single_char else ","
        return sep.join(self.letters[s] for s in symbols)


@dataclass(frozen=True)
class Word:
    """Finite word over an alphabet. The empty word is ``Word(alphabet)``."""

    alphabet: Alphabet
    symbols: bytes = b""

    def __post_init__(self):
        symbols = bytes(self.symbols)
        object.__setattr__(self, "symbols", symbols)
        if symbols and max(symbols) >= len(self.alphabet):
            raise ValueError("symbol outside alphabet")

    @classmethod
    def from_text(cls, alphabet: Alphabet, text: str | Iterable[str]) -> "Word":
        return cls(alphabet, alphabet.encode(text))

    def __len__(self) -> int:
        return len(self.symbols)

    def __str__(self) -> str:
        return self.alphabet.decode(self.symbols)

    def __getitem__(self, key):
        if isinstance(key, slice):
            return Word(self.alphabet, self.symbols[key])
        return self.alphabet.letters[self.symbols[key]]

    def __add__(self, other: "Word") -> "Word":
        return concat(self, other)

    def reversed(self) -> "Word":
        return Word(self.alphabet, self.symbols[::-1])

    def count(self, letter: str) -> int:
        return self.symbols.count(self.alphabet.index(letter))


def concat(u: Word, v: Word) -> Word:
    if u.alphabet != v.alphabet:
        raise ValueError("cannot concatenate words over different alphabets")
    return Word(u.alphabet, u.symbols + v.symbols)


@dataclass(frozen=True)
class Morphism:
    """Letter-to-word map from ``source`` to ``target``, extended to the free monoid."""

    source: Alphabet
    target: Alphabet
    images: tuple[bytes, ...]

    def __post_init__(self):
        images = tuple(bytes(im) for im in self.images)
        object.__setattr__(self, "images", images)
        if len(images) != len(self.source):
            raise ValueError("need exactly one image per source letter")
        n = len(self.target)
        for im in images:
            if im and max(im) >= n:
                raise ValueError("image symbol outside target alphabet")

    @classmethod
    def from_mapping(
        cls,
        mapping: Mapping[str, str | Sequence[str]],
        source: Alphabet | Iterable[str] | None = None,
        target: Alphabet | Iterable[str] | None = None,
    ) -> "Morphism":
        if source is None:
            source = Alphabet(tuple(mapping))
        elif not isinstance(source, Alphabet):
            source = Alphabet(tuple(source))
        if target is None:
            seen: dict[str, None] = {}
            for letter in source.letters:
                for x in mapping[letter]:
                    seen.setdefault(x)
            target = Alphabet(tuple(seen))
        elif not isinstance(target, Alphabet):
            target = Alphabet(tuple(target))
        missing = set(source.letters) - set(mapping)
        if missing:
            raise ValueError(f"no image for letters {sorted(missing)}")
        return cls(source, target, tuple(target.encode(mapping[x]) for x in source.letters))

    @property
    def width(self) -> int | None:
        """Common image length if the morphism is uniform, else None."""
        lengths = {len(im) for im in self.images}
        return lengths.pop() if len(lengths) == 1 else None

    @property
    def uniform(self) -> bool:
        return self.width is not None

    def image(self, letter: str) -> Word:
        return Word(self.target, self.images[self.source.index(letter)])

    def apply_symbols(self, symbols: bytes) -> bytes:
        images = self.images
        return b"".join([images[s] for s in symbols])

    def apply(self, w: Word) -> Word:
        if w.alphabet != self.source:
            raise ValueError("word is not over the morphism's source alphabet")
        return Word(self.target, self.apply_symbols(w.symbols))

    def power(self, k: int, w: Word) -> Word:
        for _ in range(k):
            w = self.apply(w)
        return w

    def to_json(self) -> str:
        return json.dumps(
            {
                "src": list(self.source.letters),
                "dst": list(self.target.letters),
                "map": {x: self.target.decode(im) for x, im in zip(self.source.letters, self.images)},
            }
        )

    @classmethod
    def from_json(cls, text: str) -> "Morphism":
        data = json.loads(text)
        src = Alphabet(tuple(data["src"]))
        dst = Alphabet(tuple(data["dst"]))
        return cls.from_mapping(data["map"], src, dst)


class WordStream:
    """Lazily materialized infinite word.

    ``chunks`` yields successive blocks of symbols (``bytes``).  The stream
    keeps the longest prefix computed so far, so repeated calls to
    :meth:`prefix` are cheap and always agree with each other.
    """

    def __init__(self, alphabet: Alphabet, chunks: Iterable[bytes], name: str = ""):
        self.alphabet = alphabet
        self.name = name
        self._chunks: Iterator[bytes] | None = iter(chunks)
        self._buf = bytearray()

    @classmethod
    def from_symbols(cls, alphabet: Alphabet, symbols: Iterable[int], name: str = "") -> "WordStream":
        it = iter(symbols)

        def chunks():
            while True:
                block = bytes(islice(it, 4096))
                if not block:
                    return
                yield block

        return cls(alphabet, chunks(), name)

    @classmethod
    def from_function(cls, alphabet: Alphabet, f, name: str = "") -> "WordStream":
        """Stream whose n-th symbol (0-based) is ``f(n)``."""

        def chunks():
            n = 0
            while True:
                yield bytes(f(k) for k in range(n, n + 4096))
                n += 4096

        return cls(alphabet, chunks(), name)

    def __repr__(self) -> str:
        return f"WordStream({self.name or '?'}, materialized={len(self._buf)})"

    def _extend(self, n: int) -> None:
        buf = self._buf
        while len(buf) < n:
            if self._chunks is None:
                raise ValueError(f"stream {self.name!r} is finite (length {len(buf)})")
            try:
                buf += next(self._chunks)
            except StopIteration:
                self._chunks = None

    def symbols(self, n: int) -> bytes:
        if n < 0:
            raise ValueError("prefix length must be non-negative")
        self._extend(n)
        return bytes(self._buf[:n])

    def prefix(self, n: int) -> Word:
        return Word(self.alphabet, self.symbols(n))

    def __getitem__(self, i: int) -> str:
        if i < 0:
            raise IndexError("infinite words have no negative positions")
        self._extend(i + 1)
        return self.alphabet.letters[self._buf[i]]

    def symbol_at(self, i: int) -> int:
        self._extend(i + 1)
        return self._buf[i]

    def tail(self, k: int, name: str = "") -> "WordStream":
        """The stream with its first ``k`` symbols removed."""

        def chunks():
            pos = k
            step = 4096
            while True:
                try:
                    self._extend(pos + step)
                except ValueError:
                    pass  # finite parent: hand out what is left
                block = bytes(self._buf[pos : pos + step])
                if not block:
                    return
                pos += len(block)
                yield block

        return WordStream(self.alphabet, chunks(), name or f"{self.name}[{k}:]")

    def map(self, phi: Morphism, name: str = "") -> "WordStream":
        """Image of this stream under ``phi``, applied block by block."""
        if phi.source != self.alphabet:
            raise ValueError("morphism source alphabet does not match stream alphabet")

        def chunks():
            pos = 0
            step = 1024
            while True:
                block = self.symbols(pos + step)[pos:]
                pos += len(block)
                if not block:
                    return
                yield phi.apply_symbols(block)
                step = min(step * 2, 1 << 16)

        return WordStream(phi.target, chunks(), name or f"image of {self.name}")


def _check_nonerasing(mu: Morphism, u: bytes, depth: int) -> None:
    letters = frozenset(u)
    seen = {letters}
    for _ in range(depth):
        letters = frozenset(s for x in letters for s in mu.images[x])
        if not letters:
            raise ValueError("mu^k(u) is empty for some k: no infinite fixed point")
        if letters in seen:
            return  # letter sets cycle, so the condition holds for every k
        seen.add(letters)
    warnings.warn(f"non-erasing condition only checked to depth {depth}", stacklevel=3)


def fixed_point(mu: Morphism, a: str, depth: int = FIXED_POINT_CHECK_DEPTH) -> WordStream:
    """Infinite fixed point a u mu(u) mu^2(u) ... of ``mu`` starting with letter ``a``."""
    if mu.source != mu.target:
        raise ValueError("fixed points need an endomorphism")
    x = mu.source.index(a)
    img = mu.images[x]
    if not img or img[0] != x:
        raise ValueError(f"mu({a}) does not start with {a}")
    if len(img) < 2:
        raise ValueError(f"mu({a}) = {a}: u is empty")
    _check_nonerasing(mu, img[1:], depth)
    images = mu.images

    def chunks():
        buf = bytearray(img)
        yield bytes(img)
        j = 1  # buf[:j] already expanded
        while True:
            stop = min(len(buf), j + 4096)
            if stop <= j:
                raise RuntimeError("fixed point generation stalled")
            block = b"".join([images[s] for s in buf[j:stop]])
            buf += block
            j = stop
            yield block

    return WordStream(mu.source, chunks(), name=f"fixed point from {a}")


def morphic_image(sigma: Morphism, a: str, phi: Morphism) -> WordStream:
    """phi applied to the fixed point of sigma starting at ``a``."""
    return fixed_point(sigma, a).map(phi, name=f"morphic image from {a}")


def prefix(w: WordStream, n: int) -> Word:
    return w.prefix(n)


def apply(mu: Morphism, w: Word) -> Word:
    return mu.apply(w)


def letter_occurrences(w: WordStream, horizon: int) -> Counter:
    """Occurrence count of each letter in the first ``horizon`` symbols.

    Recurrence of a morphic word ("every letter occurs at least twice") is
    only ever observed up to a horizon; this counter is the tool for that.
    """
    counts = Counter(w.symbols(horizon))
    return Counter({w.alphabet.letters[s]: c for s, c in counts.items()})


# builtin morphisms used throughout the package

FIBONACCI = Morphism.from_mapping({"a": "ab", "b": "a"})
THUE_MORSE = Morphism.from_mapping({"a": "ab", "b": "ba"})
RUDIN_SHAPIRO_SIGMA = Morphism.from_mapping({"1": "12", "2": "13", "3": "42", "4": "43"}, source="1234", target="1234")
RUDIN_SHAPIRO_PHI = Morphism.from_mapping({"1": "aa", "2": "ab", "3": "ba", "4": "bb"}, source="1234", target="ab")
NESTERENKO = Morphism.from_mapping({"0": "012", "1": "12", "2": "2"})

MORPHISMS: dict[str, tuple[Morphism, str]] = {
    "fib": (FIBONACCI, "a"),
    "thue_morse": (THUE_MORSE, "a"),
    "rudin_shapiro_sigma": (RUDIN_SHAPIRO_SIGMA, "1"),
    "nesterenko": (NESTERENKO, "0"),
}


def fibonacci_word() -> WordStream:
    return fixed_point(FIBONACCI, "a")


def thue_morse_word() -> WordStream:
    return fixed_point(THUE_MORSE, "a")


def rudin_shapiro_word() -> WordStream:
    return morphic_image(RUDIN_SHAPIRO_SIGMA, "1", RUDIN_SHAPIRO_PHI)


def nesterenko_word() -> WordStream:
    """0 1 2 1 2 2 1 2 2 2 ..., the fixed point of 0->012, 1->12, 2->2."""
    return fixed_point(NESTERENKO, "0")


def fibonacci_finite_word(n: int) -> Word:
    """f_1 = b, f_2 = a, f_n = f_{n-1} f_{n-2}."""
    alphabet = FIBONACCI.source
    if n < 1:
        raise ValueError("f_n is defined for n >= 1")
    prev, cur = b"\x01", b"\x00"
    if n == 1:
        return Word(alphabet, prev)
    for _ in range(n - 2):
        prev, cur = cur, cur + prev
    return Word(alphabet, cur)
