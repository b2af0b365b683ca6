import pytest

from bchcalc.errors import EmptyWordError, InvalidCharacterError, InvalidOrderError
from bchcalc.words import (
    Word,
    decompose_blocks,
    descending_edges,
    enumerate_words,
    parse_word,
    word_order,
)


def test_parse_word_transcribes():
    assert parse_word("XY") == "XY"
    assert isinstance(parse_word("XY"), Word)


def test_parse_word_empty():
    with pytest.raises(EmptyWordError):
        parse_word("")


def test_parse_word_bad_character_position():
    with pytest.raises(InvalidCharacterError) as exc:
        parse_word("XZY")
    assert exc.value.position == 1
    assert exc.value.char == "Z"


def test_parse_word_lowercase_rejected():
    with pytest.raises(InvalidCharacterError):
        parse_word("Xy")


@pytest.mark.parametrize(
    "text,order",
    [("X", 1), ("XY", 2), ("YYXXYXYXXYYX", 12)],
)
def test_word_order(text, order):
    assert word_order(parse_word(text)) == order


def test_decompose_blocks_reference_example():
    d = decompose_blocks(parse_word("YYXXYXYXXYYX"))
    assert d.blocks == ((0, 2), (2, 1), (1, 1), (2, 2), (1, 0))
    assert d.block_count == 5


def test_decompose_blocks_no_descending_edge():
    d = decompose_blocks(parse_word("XY"))
    assert d.blocks == ((1, 1),)
    assert d.block_count == 1


def test_decompose_blocks_single_descending_edge():
    d = decompose_blocks(parse_word("YX"))
    assert d.blocks == ((0, 1), (1, 0))
    assert d.block_count == 2


def test_enumerate_words_small():
    assert list(enumerate_words(1)) == ["X", "Y"]
    assert list(enumerate_words(2)) == ["XX", "XY", "YX", "YY"]
    three = list(enumerate_words(3))
    assert len(three) == 8
    assert three[0] == "XXX" and three[-1] == "YYY"


def test_enumerate_words_rejects_zero():
    with pytest.raises(InvalidOrderError):
        list(enumerate_words(0))


def test_enumerate_words_cardinality_and_order():
    for n in range(1, 9):
        ws = list(enumerate_words(n))
        assert len(ws) == 2**n
        assert len(set(ws)) == 2**n
        assert ws == sorted(ws)


def test_block_roundtrip_and_invariants_exhaustive():
    # every word of length <= 14: rebuild, interior positivity, descent count
    for n in range(1, 15):
        for w in enumerate_words(n):
            d = decompose_blocks(w)
            assert d.rebuild_word() == w
            assert sum(u + v for u, v in d.blocks) == len(w)
            for u, v in d.blocks[1:-1]:
                assert u > 0 and v > 0
            if d.block_count > 1:
                assert d.blocks[0][1] > 0
                assert d.blocks[-1][0] > 0
            assert d.block_count - 1 == len(descending_edges(w))
