import pytest
from hypothesis import given

from awdelta.freeword import (
    Letter, first_inversion, inversions, is_irreducible, last_inversion, order_less, parse_word,
    render_word,
)

from .strategies import words

A, B, C, AL, BE, GA = list(Letter)


@pytest.mark.parametrize("text,n", [("CABA", 4), ("CBBA", 5), ("", 0), ("gabeal", 3)])
def test_inversions(text, n):
    assert inversions(parse_word(text)) == n


def test_letter_order():
    assert A < B < C < AL < BE < GA


@pytest.mark.parametrize("text,expected", [("AABBC", True), ("BA", False), ("Cga", True)])
def test_irreducible(text, expected):
    assert is_irreducible(parse_word(text)) is expected


def test_reduction_sites():
    assert first_inversion(parse_word("BA")) == 2
    assert first_inversion(parse_word("ABBA")) == 4
    assert first_inversion(parse_word("ABC")) is None
    assert last_inversion(parse_word("BACB")) == 4


def test_order_examples():
    assert order_less(parse_word("AB"), parse_word("BA"))
    assert order_less(parse_word("A"), parse_word("AB"))
    assert not order_less(parse_word("AB"), parse_word("AC"))
    assert not order_less(parse_word("AC"), parse_word("AB"))


def test_parse_render():
    w = parse_word("ABga")
    assert w == (A, B, GA)
    assert render_word(w) == "ABga"
    with pytest.raises(ValueError):
        parse_word("AX")


@given(words)
def test_irreducible_iff_sorted(w):
    assert is_irreducible(w) == (list(w) == sorted(w))


@given(words)
def test_covering_move_drops_one_inversion(w):
    j = first_inversion(w)
    if j is None:
        return
    swapped = w[: j - 2] + (w[j - 1], w[j - 2]) + w[j:]
    assert inversions(swapped) == inversions(w) - 1
    assert order_less(swapped, w)


@given(words)
def test_order_irreflexive(w):
    assert not order_less(w, w)
