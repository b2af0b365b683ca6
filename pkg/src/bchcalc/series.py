"""Assembly and serialization of the truncated series log(exp X exp Y).

Terms are ordered by word length ascending, then lexicographically (X < Y),
which makes every serialization byte-stable across runs and thread counts.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .coeff import coefficient_block
from .errors import InvalidOrderError
from .tables import CoefficientTables
from .words import Word, enumerate_words


@dataclass(frozen=True)
class SeriesTerm:
    word: Word
    coefficient: Fraction


@dataclass(frozen=True)
class BchSeries:
    order: int
    terms: tuple[SeriesTerm, ...]


def expand(
    order: int,
    prune_zero_coefficients: bool,
    prune_zero_monomials: bool,
    t: CoefficientTables,
    threads: int | None = None,
) -> BchSeries:
    """Compute the coefficient of every word of length 1..order.

    ``prune_zero_coefficients`` drops terms whose coefficient is exactly 0;
    ``prune_zero_monomials`` drops words ending in two equal letters, whose
    right-nested commutator vanishes identically.  ``threads`` splits the
    word list into contiguous chunks; the ordered merge keeps output
    byte-identical for any thread count.
    """
    if order < 1:
        raise InvalidOrderError(order)
    words: list[Word] = []
    for n in range(1, order + 1):
        for w in enumerate_words(n):
            if prune_zero_monomials and len(w) >= 2 and w[-1] == w[-2]:
                continue
            words.append(w)

    if threads is None or threads <= 1 or len(words) < 2:
        coefficients = [coefficient_block(w, t) for w in words]
    else:
        chunk = (len(words) + threads - 1) // threads
        slices = [words[i : i + chunk] for i in range(0, len(words), chunk)]
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = pool.map(lambda ws: [coefficient_block(w, t) for w in ws], slices)
            coefficients = [c for part in parts for c in part]

    terms = tuple(
        SeriesTerm(word=w, coefficient=c)
        for w, c in zip(words, coefficients)
        if not (prune_zero_coefficients and c == 0)
    )
    return BchSeries(order=order, terms=terms)


def render_commutator(w: Word) -> str:
    """Right-nested bracket string: XXY -> [X,[X,Y]]; a single letter is bare."""
    out = w[-1]
    for letter in reversed(w[:-1]):
        out = f"[{letter},{out}]"
    return out


def serialize(s: BchSeries, format: str) -> str:
    """Render the series as text, json or csv; output is deterministic."""
    if format == "json":
        payload = {
            "order": s.order,
            "terms": [
                {
                    "word": str(term.word),
                    "num": str(term.coefficient.numerator),
                    "den": str(term.coefficient.denominator),
                }
                for term in s.terms
            ],
        }
        return json.dumps(payload, separators=(",", ":"))
    if format == "csv":
        lines = ["word,num,den"]
        lines.extend(
            f"{term.word},{term.coefficient.numerator},{term.coefficient.denominator}"
            for term in s.terms
        )
        return "\n".join(lines) + "\n"
    if format == "text":
        lines = [
            f"{term.coefficient.numerator}/{term.coefficient.denominator}"
            f" · {render_commutator(term.word)}"
            for term in s.terms
        ]
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {format!r}; expected text, json or csv")


def parse_json(text: str) -> BchSeries:
    """Inverse of serialize(..., 'json')."""
    payload = json.loads(text)
    terms = tuple(
        SeriesTerm(
            word=Word(entry["word"]),
            coefficient=Fraction(int(entry["num"]), int(entry["den"])),
        )
        for entry in payload["terms"]
    )
    return BchSeries(order=int(payload["order"]), terms=terms)
