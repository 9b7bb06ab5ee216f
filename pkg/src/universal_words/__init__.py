"""Exact combinatorics of k-subsequence-universal words of fixed length.

A word over {1..sigma} is k-universal when every length-k word over the same
alphabet occurs in it as a subsequence. This package counts those words
exactly, ranks and unranks them lexicographically, streams them in order with
bounded per-word work, exposes the greedy arch factorization behind all of it,
and ships naive brute-force oracles to validate everything against.
"""

from .arches import (
    ArchFactorization,
    RankContext,
    arch_factorize,
    build_rank_context,
    is_k_universal,
    universality_index,
)
from .closed_forms import count_arches, count_index_zero, count_one_universal
from .counting import SuffixCountTable, build_table, count_suffixes, count_universal
from .errors import (
    AlphabetMismatch,
    EmptySet,
    GuardExceeded,
    IndexOutOfRange,
    InvalidK,
    LengthMismatch,
    ParseError,
    RankOutOfRange,
    SymbolOutOfRange,
    UniversalWordsError,
)
from .ranking import RankResult, rank
from .unranking import EnumerationCursor, enumerate_words, unrank
from .words import Alphabet, Word, format_word, lex_compare, make_word, parse_word

__version__ = "0.1.0"

__all__ = [
    "Alphabet",
    "AlphabetMismatch",
    "ArchFactorization",
    "EmptySet",
    "EnumerationCursor",
    "GuardExceeded",
    "IndexOutOfRange",
    "InvalidK",
    "LengthMismatch",
    "ParseError",
    "RankContext",
    "RankOutOfRange",
    "RankResult",
    "SuffixCountTable",
    "SymbolOutOfRange",
    "UniversalWordsError",
    "Word",
    "arch_factorize",
    "build_rank_context",
    "build_table",
    "count_arches",
    "count_index_zero",
    "count_one_universal",
    "count_suffixes",
    "count_universal",
    "enumerate_words",
    "format_word",
    "is_k_universal",
    "lex_compare",
    "make_word",
    "parse_word",
    "rank",
    "unrank",
    "universality_index",
]
