import pytest
from hypothesis import given

from awdelta.delta import A, B, C, DeltaElement, alpha, casimir, gamma
from awdelta.expr import BinOp, Neg, ParseError, Pow, Sym, parse, parse_element, to_text
from awdelta.qfield import Q, q_power

from .strategies import elements

qi = q_power(-1)


def test_tree_shape():
    t = parse("q*A*B - q^-1*B*A")
    assert isinstance(t, BinOp) and t.op == "-"
    assert t.right.left.left == Pow(Sym("q"), -1)
    t = parse("Om^2 * al")
    assert t == BinOp("*", Pow(Sym("Om"), 2), Sym("al"))


def test_precedence():
    assert parse("-A B") == Neg(BinOp("*", Sym("A"), Sym("B")))
    assert parse("A B^2") == BinOp("*", Sym("A"), Pow(Sym("B"), 2))
    assert parse_element("A - B + C") == A - B + C
    assert parse_element("2A") == A.scale(2)


@pytest.mark.parametrize("text,offset", [("A +* B", 3), ("(A", 2), ("A ? B", 2), ("", 0), ("A^-1", 2), ("A^", 2)])
def test_syntax_errors(text, offset):
    with pytest.raises(ParseError) as info:
        parse(text)
    assert info.value.offset == offset
    assert "expected" in str(info.value)


def test_evaluation():
    assert parse_element("q*A*B - q^-1*B*A") == gamma.scale(Q - qi) - C.scale(q_power(2) - q_power(-2))
    assert parse_element("Om") == casimir()
    assert parse_element("0*A").is_zero()
    assert parse_element("(q^2 - q^-2)/(q + q^-1)") == DeltaElement.scalar(Q - qi)
    assert parse_element("ga A") == parse_element("A ga")


def test_division_rules():
    with pytest.raises(ValueError):
        parse_element("A / B")
    with pytest.raises(ZeroDivisionError):
        parse_element("A / (q - q)")


def test_to_text_reparses():
    for s in ("q*A*B - q^-1*B*A", "-A^2 (B + 3 C)", "Om^2 al / 2"):
        assert parse_element(to_text(parse(s))) == parse_element(s)


@given(elements(4, 4))
def test_render_parse_round_trip(x):
    assert parse_element(str(x)) == x
