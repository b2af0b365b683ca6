"""Binary words over the alphabet {X, Y} and their block structure.

A commutator monomial [w1,[w2,[...,[w_{N-1},wN]...]]] is identified with the
letter string w1...wN.  A "descending edge" is an adjacent Y followed by X;
cutting at every descending edge splits a word into maximal blocks of the
form X^u Y^v.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator

from .errors import EmptyWordError, InvalidCharacterError, InvalidOrderError

ALPHABET = "XY"


class Word(str):
    """A nonempty, validated string over 'X'/'Y'.

    Subclasses str so words compare, hash and sort like plain strings
    (lexicographic with X < Y comes for free from ASCII order).
    """

    __slots__ = ()

    def __new__(cls, text: str) -> "Word":
        if not text:
            raise EmptyWordError()
        for i, ch in enumerate(text):
            if ch not in ALPHABET:
                raise InvalidCharacterError(ch, i)
        return super().__new__(cls, text)

    def __repr__(self) -> str:
        return f"Word({str.__repr__(self)})"


def parse_word(text: str) -> Word:
    """Parse an external word string; case-sensitive, 'X'/'Y' only."""
    return Word(text)


def word_order(w: Word) -> int:
    """The order of the monomial: its letter count."""
    return len(w)


@dataclass(frozen=True)
class BlockDecomposition:
    """The (u_i, v_i) block pairs obtained by cutting at descending edges.

    Interior blocks have u_i > 0 and v_i > 0; only the first block may have
    u = 0 and only the last may have v = 0.
    """

    blocks: tuple[tuple[int, int], ...]

    @property
    def block_count(self) -> int:
        return len(self.blocks)

    def rebuild_word(self) -> Word:
        return Word("".join("X" * u + "Y" * v for u, v in self.blocks))


def descending_edges(w: Word) -> list[int]:
    """Indices j with w[j] == 'Y' and w[j+1] == 'X'."""
    return [j for j in range(len(w) - 1) if w[j] == "Y" and w[j + 1] == "X"]


def decompose_blocks(w: Word) -> BlockDecomposition:
    """Split w into maximal X^u Y^v blocks, cutting at every descending edge."""
    blocks = []
    for segment in w.replace("YX", "Y|X").split("|"):
        u = segment.count("X")
        blocks.append((u, len(segment) - u))
    return BlockDecomposition(blocks=tuple(blocks))


def enumerate_words(n: int) -> Iterator[Word]:
    """Yield all 2^n words of length n in lexicographic order (X < Y)."""
    if n < 1:
        raise InvalidOrderError(n)
    for letters in product(ALPHABET, repeat=n):
        yield Word("".join(letters))
