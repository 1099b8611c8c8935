"""Text syntax for elements of Delta.

Grammar, loosest binding first::

    sum      := signed (("+" | "-") signed)*
    signed   := "-" signed | product
    product  := power (("*" | "/" | <juxtaposition>) power)*
    power    := atom ("^" ["-"] INT)?
    atom     := INT | IDENT | "(" sum ")"

Identifiers are ``A B C al be ga Om q``.  Products keep their left-to-right
order; ``/`` only accepts a scalar divisor, which is enough to read back the
``(num)/(den)`` coefficients produced by :class:`~awdelta.qfield.RatFuncQ`.
Negative exponents are allowed on ``q`` alone.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import List, Tuple, Union

from .delta import DeltaElement, casimir, generators
from .qfield import ONE, Q

__all__ = [
    "ParseError",
    "Sym",
    "Num",
    "Neg",
    "Paren",
    "BinOp",
    "Pow",
    "Expr",
    "parse",
    "eval_expr",
    "parse_element",
    "to_text",
]

IDENTS = ("al", "be", "ga", "Om", "A", "B", "C", "q")


class ParseError(ValueError):
    def __init__(self, text: str, offset: int, expected: str):
        self.text, self.offset, self.expected = text, offset, expected
        got = repr(text[offset]) if offset < len(text) else "end of input"
        super().__init__(f"syntax error at offset {offset}: expected {expected}, got {got}")


@dataclass(frozen=True)
class Sym:
    name: str


@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Neg:
    operand: "Expr"


@dataclass(frozen=True)
class Paren:
    inner: "Expr"


@dataclass(frozen=True)
class BinOp:
    op: str  # one of + - * /
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exponent: int


Expr = Union[Sym, Num, Neg, Paren, BinOp, Pow]

_TOKEN = re.compile(r"\s*(?:(\d+)|(al|be|ga|Om|A|B|C|q)|([-+*/^()]))")

Token = Tuple[str, str, int]  # kind, text, offset


def _tokenize(text: str) -> List[Token]:
    out: List[Token] = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if m is None:
            off = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(text, off, "a number, identifier or operator")
        kind = "int" if m.group(1) else "ident" if m.group(2) else "op"
        out.append((kind, m.group(m.lastindex), m.start(m.lastindex)))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def fail(self, expected: str):
        raise ParseError(self.text, self.tok[2], expected)

    def eat(self, s: str) -> bool:
        if self.tok[0] == "op" and self.tok[1] == s:
            self.i += 1
            return True
        return False

    def starts_atom(self) -> bool:
        kind, s, _ = self.tok
        return kind in ("int", "ident") or (kind == "op" and s == "(")

    def parse(self) -> Expr:
        e = self.sum()
        if self.tok[0] != "end":
            self.fail("an operator or end of input")
        return e

    def sum(self) -> Expr:
        e = self.signed()
        while self.tok[0] == "op" and self.tok[1] in "+-":
            op = self.tok[1]
            self.i += 1
            e = BinOp(op, e, self.signed())
        return e

    def signed(self) -> Expr:
        if self.eat("-"):
            return Neg(self.signed())
        return self.product()

    def product(self) -> Expr:
        e = self.power()
        while True:
            if self.tok[0] == "op" and self.tok[1] in "*/":
                op = self.tok[1]
                self.i += 1
                e = BinOp(op, e, self.power())
            elif self.starts_atom():
                e = BinOp("*", e, self.power())
            else:
                return e

    def power(self) -> Expr:
        base = self.atom()
        if not self.eat("^"):
            return base
        if base != Sym("q") and self.tok[1] == "-":
            self.fail("a nonnegative exponent (only q takes negative powers)")
        neg = self.eat("-")
        if self.tok[0] != "int":
            self.fail("an integer exponent")
        n = int(self.tok[1])
        self.i += 1
        return Pow(base, -n if neg else n)

    def atom(self) -> Expr:
        kind, s, _ = self.tok
        if kind == "int":
            self.i += 1
            return Num(int(s))
        if kind == "ident":
            self.i += 1
            return Sym(s)
        if self.eat("("):
            inner = self.sum()
            if not self.eat(")"):
                self.fail("')'")
            return Paren(inner)
        self.fail("an operand")


def parse(text: str) -> Expr:
    return _Parser(text).parse()


def eval_expr(e: Expr) -> DeltaElement:
    """Evaluate to a normal form; ``Om`` expands to the Casimir element."""
    if isinstance(e, Num):
        return DeltaElement.scalar(e.value)
    if isinstance(e, Sym):
        if e.name == "q":
            return DeltaElement.scalar(Q)
        if e.name == "Om":
            return casimir()
        return generators()[{"al": "alpha", "be": "beta", "ga": "gamma"}.get(e.name, e.name)]
    if isinstance(e, Paren):
        return eval_expr(e.inner)
    if isinstance(e, Neg):
        return -eval_expr(e.operand)
    if isinstance(e, Pow):
        if e.base == Sym("q"):
            return DeltaElement.scalar(Q ** e.exponent)
        return eval_expr(e.base) ** e.exponent
    x, y = eval_expr(e.left), eval_expr(e.right)
    if e.op == "+":
        return x + y
    if e.op == "-":
        return x - y
    if e.op == "*":
        return x * y
    if y.is_zero():
        raise ZeroDivisionError("division by zero")
    if not y.is_scalar():
        raise ValueError("only division by a nonzero scalar is supported")
    return x.scale(ONE / y.scalar_part())


def parse_element(text: str) -> DeltaElement:
    return eval_expr(parse(text))


def to_text(e: Expr) -> str:
    """Fully explicit rendering of a syntax tree; ``parse(to_text(e)) == e``
    up to the redundant parentheses it inserts."""
    if isinstance(e, Num):
        return str(e.value)
    if isinstance(e, Sym):
        return e.name
    if isinstance(e, Paren):
        return "(" + to_text(e.inner) + ")"
    if isinstance(e, Neg):
        return "-(" + to_text(e.operand) + ")"
    if isinstance(e, Pow):
        return f"({to_text(e.base)})^{e.exponent}" if not isinstance(e.base, (Sym, Num)) \
            else f"{to_text(e.base)}^{e.exponent}"
    return f"({to_text(e.left)} {e.op} {to_text(e.right)})"

