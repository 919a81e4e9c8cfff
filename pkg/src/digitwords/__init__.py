"""Digit words: automatic and morphic sequences, certified expansions of constructed reals,
BBP digit extraction, power-series identities and continued fractions."""

from .reals import PrecisionError, RealSource, parse_source
from .words import Alphabet, Morphism, Word, WordStream, fixed_point

__all__ = ["Alphabet", "Morphism", "Word", "WordStream", "fixed_point", "PrecisionError", "RealSource", "parse_source"]
__version__ = "0.1.0"
