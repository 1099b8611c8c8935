"""Exact arithmetic in the rational function field Q(q).

Coefficients are stored as ``int`` whenever they are integral and as
:class:`fractions.Fraction` otherwise; nearly every coefficient that shows up
in the algebra is an integer Laurent polynomial, so the integer path is the
hot one.

A :class:`RatFuncQ` is kept in canonical form ``num/den`` where ``den`` is an
ordinary polynomial in ``q`` with constant term nonzero, coprime to ``num``,
and monic.  With that convention two rational functions are equal exactly when
their numerators and denominators agree term by term.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Dict, List, Mapping, Tuple, Union

__all__ = [
    "QRational",
    "LaurentQ",
    "RatFuncQ",
    "PoleError",
    "as_ratfunc",
    "q_integer",
    "q_power",
    "specialize_q",
    "ZERO",
    "ONE",
    "Q",
]

QRational = Fraction
Scalar = Union[int, Fraction]


class PoleError(ArithmeticError):
    """Raised when a rational function is evaluated at a pole."""


def _norm(c: Scalar) -> Scalar:
    if type(c) is int:
        return c
    if c.denominator == 1:
        return int(c.numerator)
    return c


def _to_scalar(c) -> Scalar:
    if isinstance(c, bool):
        return int(c)
    if isinstance(c, int):
        return c
    if isinstance(c, Rational):
        return _norm(Fraction(c.numerator, c.denominator))
    if isinstance(c, str):
        return _norm(Fraction(c))
    raise TypeError(f"not an exact rational: {c!r}")


# ---------------------------------------------------------------------------
# dense polynomial helpers (coefficient lists, lowest degree first)
# ---------------------------------------------------------------------------

def _ptrim(p: List[Scalar]) -> List[Scalar]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _pdivmod(a: List[Scalar], b: List[Scalar]) -> Tuple[List[Scalar], List[Scalar]]:
    a = list(a)
    if len(a) < len(b):
        return [], a
    lead = b[-1]
    quo: List[Scalar] = [0] * (len(a) - len(b) + 1)
    for shift in range(len(a) - len(b), -1, -1):
        c = a[shift + len(b) - 1]
        if c == 0:
            continue
        f = _norm(Fraction(c) / lead)
        quo[shift] = f
        for i, bc in enumerate(b):
            a[shift + i] = _norm(a[shift + i] - f * bc)
    return _ptrim(quo), _ptrim(a[: len(b) - 1])


def _pmonic(p: List[Scalar]) -> List[Scalar]:
    lead = p[-1]
    if lead == 1:
        return p
    return [_norm(Fraction(c) / lead) for c in p]


def _pgcd(a: List[Scalar], b: List[Scalar]) -> List[Scalar]:
    a, b = _ptrim(list(a)), _ptrim(list(b))
    while b:
        a, b = b, _pdivmod(a, b)[1]
    return _pmonic(a) if a else a


# ---------------------------------------------------------------------------
# Laurent polynomials
# ---------------------------------------------------------------------------

class LaurentQ:
    """Laurent polynomial in ``q`` with rational coefficients.

    ``terms`` maps exponent to a nonzero coefficient.  Instances are treated
    as immutable.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[int, Scalar] | None = None, _trusted: bool = False):
        if _trusted:
            self.terms = terms
        else:
            clean: Dict[int, Scalar] = {}
            for e, c in (terms or {}).items():
                c = _to_scalar(c)
                if c != 0:
                    clean[int(e)] = c
            self.terms = clean
        self._hash = None

    # constructors -----------------------------------------------------
    @classmethod
    def monomial(cls, c: Scalar, e: int = 0) -> "LaurentQ":
        c = _to_scalar(c)
        return cls({e: c} if c else {}, _trusted=True)

    @classmethod
    def from_poly(cls, coeffs: List[Scalar], shift: int = 0) -> "LaurentQ":
        return cls({i + shift: c for i, c in enumerate(coeffs) if c != 0}, _trusted=True)

    # queries ----------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return len(self.terms) == 1 and self.terms.get(0) == 1

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def min_exp(self) -> int:
        return min(self.terms)

    def max_exp(self) -> int:
        return max(self.terms)

    def to_poly(self) -> Tuple[List[Scalar], int]:
        """Return ``(coeffs, shift)`` with ``self == q^shift * sum coeffs[i] q^i``."""
        lo, hi = self.min_exp(), self.max_exp()
        out: List[Scalar] = [0] * (hi - lo + 1)
        for e, c in self.terms.items():
            out[e - lo] = c
        return out, lo

    def evaluate(self, x: Fraction) -> Scalar:
        total: Scalar = 0
        for e, c in self.terms.items():
            total += c * x ** e
        return _norm(Fraction(total)) if not isinstance(total, int) else total

    # arithmetic -------------------------------------------------------
    def __add__(self, other: "LaurentQ") -> "LaurentQ":
        if not other.terms:
            return self
        if not self.terms:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = _norm(v) if type(v) is not int else v
            else:
                out.pop(e, None)
        return LaurentQ(out, _trusted=True)

    def __neg__(self) -> "LaurentQ":
        return LaurentQ({e: -c for e, c in self.terms.items()}, _trusted=True)

    def __sub__(self, other: "LaurentQ") -> "LaurentQ":
        return self + (-other)

    def __mul__(self, other: "LaurentQ") -> "LaurentQ":
        a, b = self.terms, other.terms
        if not a or not b:
            return LaurentQ({}, _trusted=True)
        if len(b) == 1:
            (eb, cb), = b.items()
            if cb == 1:
                return LaurentQ({e + eb: c for e, c in a.items()}, _trusted=True)
            return LaurentQ({e + eb: _norm(c * cb) for e, c in a.items()}, _trusted=True)
        if len(a) == 1:
            return other * self
        out: Dict[int, Scalar] = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                k = ea + eb
                out[k] = out.get(k, 0) + ca * cb
        return LaurentQ({e: _norm(c) for e, c in out.items() if c}, _trusted=True)

    def scale(self, c: Scalar) -> "LaurentQ":
        if c == 0:
            return LaurentQ({}, _trusted=True)
        return LaurentQ({e: _norm(v * c) for e, v in self.terms.items()}, _trusted=True)

    def shift(self, k: int) -> "LaurentQ":
        return LaurentQ({e + k: c for e, c in self.terms.items()}, _trusted=True)

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentQ):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"LaurentQ({_render_laurent(self)!r})"

    def __str__(self) -> str:
        return _render_laurent(self)


def _render_coeff_term(c: Scalar, e: int) -> Tuple[str, str]:
    """Return (sign, body) for the term ``c*q^e``."""
    sign = "-" if c < 0 else "+"
    a = abs(c)
    if e == 0:
        return sign, str(a)
    qpart = "q" if e == 1 else f"q^{e}"
    if a == 1:
        return sign, qpart
    return sign, f"{a}*{qpart}"


def _render_laurent(p: LaurentQ) -> str:
    if not p.terms:
        return "0"
    pieces = []
    for i, e in enumerate(sorted(p.terms, reverse=True)):
        sign, body = _render_coeff_term(p.terms[e], e)
        if i == 0:
            pieces.append(body if sign == "+" else "-" + body)
        else:
            pieces.append(f" {sign} {body}")
    return "".join(pieces)


_LZERO = LaurentQ({}, _trusted=True)
_LONE = LaurentQ({0: 1}, _trusted=True)


# ---------------------------------------------------------------------------
# rational functions
# ---------------------------------------------------------------------------

class RatFuncQ:
    """An element of Q(q) held in canonical form ``num/den``."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: LaurentQ, den: LaurentQ | None = None, _canonical: bool = False):
        if den is None:
            den = _LONE
            _canonical = True
        if _canonical:
            self.num, self.den = num, den
        else:
            if den.is_zero():
                raise ZeroDivisionError("rational function with zero denominator")
            self.num, self.den = _canonicalize(num, den)
        self._hash = None

    # constructors -----------------------------------------------------
    @classmethod
    def const(cls, c) -> "RatFuncQ":
        return cls(LaurentQ.monomial(_to_scalar(c), 0))

    @classmethod
    def qpow(cls, e: int, c=1) -> "RatFuncQ":
        return cls(LaurentQ.monomial(_to_scalar(c), e))

    @classmethod
    def laurent(cls, terms: Mapping[int, Scalar]) -> "RatFuncQ":
        return cls(LaurentQ(terms))

    # queries ----------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.num.terms

    def __bool__(self) -> bool:
        return bool(self.num.terms)

    def is_laurent(self) -> bool:
        return self.den is _LONE or self.den.is_one()

    def is_one(self) -> bool:
        return self.is_laurent() and self.num.is_one()

    def is_monomial(self) -> bool:
        """True for ``c*q^e`` with ``c`` nonzero (units of the Laurent ring)."""
        return self.is_laurent() and self.num.is_monomial()

    # arithmetic -------------------------------------------------------
    def __add__(self, other) -> "RatFuncQ":
        other = _maybe(other)
        if other is None:
            return NotImplemented
        if not other.num.terms:
            return self
        if not self.num.terms:
            return other
        if self.den is _LONE and other.den is _LONE:
            return RatFuncQ(self.num + other.num)
        if self.den == other.den:
            return RatFuncQ(self.num + other.num, self.den)
        return RatFuncQ(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RatFuncQ":
        return RatFuncQ(-self.num, self.den, _canonical=True)

    def __sub__(self, other) -> "RatFuncQ":
        other = _maybe(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "RatFuncQ":
        other = _maybe(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other) -> "RatFuncQ":
        if not isinstance(other, RatFuncQ):
            if isinstance(other, (int, Fraction)):
                return RatFuncQ(self.num.scale(_to_scalar(other)), self.den, _canonical=True)
            other = _maybe(other)
            if other is None:
                return NotImplemented
        if self.den is _LONE and other.den is _LONE:
            return RatFuncQ(self.num * other.num)
        return RatFuncQ(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "RatFuncQ":
        if not self.num.terms:
            raise ZeroDivisionError("division by zero in Q(q)")
        return RatFuncQ(self.den, self.num)

    def __truediv__(self, other) -> "RatFuncQ":
        other = _maybe(other)
        if other is None:
            return NotImplemented
        if not other.num.terms:
            raise ZeroDivisionError("division by zero in Q(q)")
        if other.is_monomial():
            (e, c), = other.num.terms.items()
            return RatFuncQ(self.num.shift(-e).scale(_norm(Fraction(1) / c)), self.den, _canonical=True)
        return RatFuncQ(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other) -> "RatFuncQ":
        other = _maybe(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, n: int) -> "RatFuncQ":
        if n < 0:
            return self.inverse() ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, RatFuncQ):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)):
            return self == RatFuncQ.const(other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __repr__(self) -> str:
        return f"RatFuncQ({str(self)!r})"

    def __str__(self) -> str:
        if self.is_laurent():
            return _render_laurent(self.num)
        return f"({_render_laurent(self.num)})/({_render_laurent(self.den)})"

    def is_single_term(self) -> bool:
        return self.is_laurent() and len(self.num.terms) <= 1

    def to_json(self) -> dict:
        def terms(p: LaurentQ):
            out = []
            for e in sorted(p.terms, reverse=True):
                c = Fraction(p.terms[e])
                out.append([e, f"{c.numerator}/{c.denominator}"])
            return out

        return {"num": terms(self.num), "den": terms(self.den)}

    @classmethod
    def from_json(cls, data: Mapping) -> "RatFuncQ":
        def lp(items):
            return LaurentQ({int(e): Fraction(c) for e, c in items})

        return cls(lp(data["num"]), lp(data["den"]))


def _canonicalize(num: LaurentQ, den: LaurentQ) -> Tuple[LaurentQ, LaurentQ]:
    if not num.terms:
        return _LZERO, _LONE
    if den.is_monomial():
        (e, c), = den.terms.items()
        if c == 1:
            return num.shift(-e), _LONE
        return num.shift(-e).scale(_norm(Fraction(1) / c)), _LONE
    dpoly, dshift = den.to_poly()
    npoly, nshift = num.to_poly()
    g = _pgcd(npoly, dpoly)
    if len(g) > 1:
        npoly = _pdivmod(npoly, g)[0]
        dpoly = _pdivmod(dpoly, g)[0]
    lead = dpoly[-1]
    if lead != 1:
        inv = Fraction(1) / lead
        npoly = [_norm(c * inv) for c in npoly]
        dpoly = [_norm(c * inv) for c in dpoly]
    new_num = LaurentQ.from_poly(npoly, nshift - dshift)
    if len(dpoly) == 1:
        return new_num, _LONE
    return new_num, LaurentQ.from_poly(dpoly, 0)


def _maybe(x) -> RatFuncQ | None:
    if isinstance(x, RatFuncQ):
        return x
    if isinstance(x, (int, Fraction, LaurentQ)) or (isinstance(x, Rational) and not isinstance(x, bool)):
        return as_ratfunc(x)
    return None


def as_ratfunc(x) -> RatFuncQ:
    """Coerce ints, fractions and Laurent polynomials into ``RatFuncQ``."""
    if isinstance(x, RatFuncQ):
        return x
    if isinstance(x, LaurentQ):
        return RatFuncQ(x)
    if isinstance(x, (int, Fraction, str)) or isinstance(x, Rational):
        return RatFuncQ.const(x)
    raise TypeError(f"cannot coerce {x!r} to an element of Q(q)")


ZERO = RatFuncQ(_LZERO)
ONE = RatFuncQ(_LONE)
Q = RatFuncQ.qpow(1)


def q_power(e: int, c=1) -> RatFuncQ:
    """``c * q^e``."""
    return RatFuncQ.qpow(e, c)


def q_integer(n: int) -> RatFuncQ:
    """The quantum integer ``[n]_q = q^(n-1) + q^(n-3) + ... + q^(1-n)``."""
    if n < 0:
        raise ValueError("q_integer is defined for n >= 0")
    return RatFuncQ(LaurentQ({n - 1 - 2 * i: 1 for i in range(n)}, _trusted=True))


def specialize_q(x, q0) -> Fraction:
    """Evaluate ``x`` at the rational point ``q = q0``.

    Raises :class:`PoleError` when ``q0`` is 0 or a root of the canonical
    denominator.
    """
    x = as_ratfunc(x)
    q0 = Fraction(q0)
    if q0 == 0:
        raise PoleError("cannot specialize a Laurent expression at q = 0")
    d = Fraction(x.den.evaluate(q0))
    if d == 0:
        raise PoleError(f"denominator {x.den} vanishes at q = {q0}")
    return Fraction(x.num.evaluate(q0)) / d
