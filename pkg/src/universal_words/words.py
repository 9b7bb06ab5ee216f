"""Words over the integer alphabet {1, ..., sigma} and their text format."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .errors import AlphabetMismatch, LengthMismatch, ParseError, SymbolOutOfRange


@dataclass(frozen=True)
class Alphabet:
    """The ordered alphabet {1, ..., sigma}."""

    sigma: int

    def __post_init__(self):
        if self.sigma < 1:
            raise ValueError(f"alphabet size must be at least 1, got {self.sigma}")

    def symbols(self) -> range:
        return range(1, self.sigma + 1)


@lru_cache(maxsize=None)
def _alphabet(sigma: int) -> Alphabet:
    return Alphabet(sigma)


@dataclass(frozen=True)
class Word:
    """An immutable word; symbols are 1-based integers within the alphabet."""

    symbols: tuple[int, ...]
    alphabet: Alphabet

    def __post_init__(self):
        sigma = self.alphabet.sigma
        if not all(1 <= s <= sigma for s in self.symbols):
            for pos, s in enumerate(self.symbols, 1):
                if not 1 <= s <= sigma:
                    raise SymbolOutOfRange(pos, s)

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[int]:
        return iter(self.symbols)

    def __str__(self) -> str:
        return format_word(self)

    def __repr__(self) -> str:
        return f"Word({format_word(self)!r}, sigma={self.alphabet.sigma})"


def make_word(symbols: Sequence[int], sigma: int) -> Word:
    """Build a word over {1..sigma}, validating every symbol."""
    return Word(tuple(symbols), _alphabet(sigma))


def lex_compare(w: Word, v: Word) -> int:
    """Compare equal-length words lexicographically: -1, 0 or 1."""
    if w.alphabet != v.alphabet:
        raise AlphabetMismatch(
            f"cannot compare words over alphabets of size "
            f"{w.alphabet.sigma} and {v.alphabet.sigma}"
        )
    if len(w.symbols) != len(v.symbols):
        raise LengthMismatch(
            f"cannot compare words of length {len(w.symbols)} and {len(v.symbols)}"
        )
    if w.symbols < v.symbols:
        return -1
    if w.symbols > v.symbols:
        return 1
    return 0


def format_word(w: Word) -> str:
    """Canonical text: concatenated digits (sigma <= 9) or comma-separated numbers."""
    if w.alphabet.sigma <= 9:
        return "".join(map(str, w.symbols))
    return ",".join(map(str, w.symbols))


def parse_word(text: str, sigma: int) -> Word:
    """Inverse of format_word. Empty text parses to the empty word."""
    alphabet = _alphabet(sigma)
    if sigma <= 9:
        symbols = []
        for pos, ch in enumerate(text, 1):
            if not ch.isdigit():
                raise ParseError(pos, f"expected a digit, got {ch!r}")
            value = int(ch)
            if not 1 <= value <= sigma:
                raise SymbolOutOfRange(pos, value)
            symbols.append(value)
        return Word(tuple(symbols), alphabet)
    if text == "":
        return Word((), alphabet)
    symbols = []
    offset = 1  # 1-based character position of the current token
    for token in text.split(","):
        if not token.isdigit():
            raise ParseError(offset, f"expected a number, got {token!r}")
        value = int(token)
        if not 1 <= value <= sigma:
            raise SymbolOutOfRange(len(symbols) + 1, value)
        symbols.append(value)
        offset += len(token) + 1
    return Word(tuple(symbols), alphabet)
