"""Exact-arithmetic truncated Baker-Campbell-Hausdorff series."""

__version__ = "0.1.0"

from .coeff import coefficient_block, coefficient_naive, enumerate_compositions
from .series import BchSeries, SeriesTerm, expand, parse_json, serialize
from .tables import CoefficientTables, f_prime_direct, g_prime_direct, precompute_tables
from .words import (
    BlockDecomposition,
    Word,
    decompose_blocks,
    enumerate_words,
    parse_word,
    word_order,
)

__all__ = [
    "BchSeries",
    "BlockDecomposition",
    "CoefficientTables",
    "SeriesTerm",
    "Word",
    "__version__",
    "coefficient_block",
    "coefficient_naive",
    "decompose_blocks",
    "enumerate_compositions",
    "enumerate_words",
    "expand",
    "f_prime_direct",
    "g_prime_direct",
    "parse_json",
    "parse_word",
    "precompute_tables",
    "serialize",
    "word_order",
]
