"""2x2 matrices over Q(q)[lam, lam^-1] and the representation ``pi``.

``pi`` sends ``A, B, C`` to ``q X + q^-1 X^-1`` for the three matrices
``X = MA, MB, MC`` below and every central generator to ``nu * I`` with
``nu = (q^2 + q^-2) mu + mu^2``, ``mu = lam + lam^-1``.  The modular group
acts on matrices by conjugation with ``p`` (for rho) and ``s`` (for sigma).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Dict, Iterator, List, Mapping, Sequence, Tuple

from .delta import DeltaElement, PBWMonomial
from .qfield import ONE, ZERO, RatFuncQ, as_ratfunc, q_power

__all__ = [
    "LaurentL",
    "LaurentMat2",
    "NonUnitDeterminant",
    "LAM",
    "MU",
    "named_matrices",
    "nu",
    "mat_inverse",
    "pi",
    "pi_generators",
    "psl2z_on_lambda",
    "is_central_lambda",
    "alternating_words",
    "faithfulness_probe",
    "FaithfulnessReport",
    "verify_commuting_diagram",
]


class NonUnitDeterminant(ArithmeticError):
    """The determinant is not a unit ``c * lam^k`` of the Laurent ring."""


class LaurentL:
    """Laurent polynomial in ``lam`` with coefficients in Q(q)."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[int, object] | None = None):
        clean: Dict[int, RatFuncQ] = {}
        for e, c in (terms or {}).items():
            c = as_ratfunc(c)
            if c:
                clean[int(e)] = c
        self.terms = clean

    @classmethod
    def _raw(cls, terms: Dict[int, RatFuncQ]) -> "LaurentL":
        obj = cls.__new__(cls)
        obj.terms = terms
        return obj

    @classmethod
    def const(cls, c) -> "LaurentL":
        return cls({0: c})

    @classmethod
    def lam(cls, e: int = 1, c=ONE) -> "LaurentL":
        return cls({e: c})

    def is_zero(self) -> bool:
        return not self.terms

    def is_unit(self) -> bool:
        return len(self.terms) == 1

    def _coerce(self, other) -> "LaurentL":
        return other if isinstance(other, LaurentL) else LaurentL.const(other)

    def __add__(self, other) -> "LaurentL":
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e)
            v = c if v is None else v + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return LaurentL._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentL":
        return LaurentL._raw({e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "LaurentL":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "LaurentL":
        return self._coerce(other) - self

    def __mul__(self, other) -> "LaurentL":
        if not isinstance(other, LaurentL):
            c = as_ratfunc(other)
            return LaurentL._raw({e: v * c for e, v in self.terms.items()}) if c else LaurentL()
        out: Dict[int, RatFuncQ] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                k = e1 + e2
                v = out.get(k)
                out[k] = c1 * c2 if v is None else v + c1 * c2
        return LaurentL._raw({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentL):
            return self.terms == other.terms
        return self.terms == self._coerce(other).terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            lam = "" if e == 0 else ("lam" if e == 1 else f"lam^{e}")
            if not lam:
                parts.append(str(c) if c.is_single_term() else f"({c})")
            elif c.is_one():
                parts.append(lam)
            elif c == -ONE:
                parts.append(f"-{lam}")
            elif c.is_single_term():
                parts.append(f"{c}*{lam}")
            else:
                parts.append(f"({c})*{lam}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentL({str(self)!r})"

    def to_json(self) -> list:
        return [[e, self.terms[e].to_json()] for e in sorted(self.terms, reverse=True)]


LAM = LaurentL.lam(1)
MU = LaurentL({1: 1, -1: 1})


def nu() -> LaurentL:
    return MU * (q_power(2) + q_power(-2)) + MU * MU


@dataclass(frozen=True, eq=False)
class LaurentMat2:
    e11: LaurentL
    e12: LaurentL
    e21: LaurentL
    e22: LaurentL

    @classmethod
    def of(cls, rows: Sequence[Sequence[object]]) -> "LaurentMat2":
        def conv(x):
            return x if isinstance(x, LaurentL) else LaurentL.const(x)

        (a, b), (c, d) = rows
        return cls(conv(a), conv(b), conv(c), conv(d))

    @classmethod
    def scalar(cls, theta) -> "LaurentMat2":
        theta = theta if isinstance(theta, LaurentL) else LaurentL.const(theta)
        return cls(theta, LaurentL(), LaurentL(), theta)

    def entries(self) -> Tuple[LaurentL, LaurentL, LaurentL, LaurentL]:
        return (self.e11, self.e12, self.e21, self.e22)

    def __add__(self, other: "LaurentMat2") -> "LaurentMat2":
        return LaurentMat2(*(x + y for x, y in zip(self.entries(), other.entries())))

    def __neg__(self) -> "LaurentMat2":
        return LaurentMat2(*(-x for x in self.entries()))

    def __sub__(self, other: "LaurentMat2") -> "LaurentMat2":
        return self + (-other)

    def __mul__(self, other) -> "LaurentMat2":
        if isinstance(other, LaurentMat2):
            a, b, c, d = self.entries()
            e, f, g, h = other.entries()
            return LaurentMat2(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)
        return LaurentMat2(*(x * other for x in self.entries()))

    def __rmul__(self, other) -> "LaurentMat2":
        return LaurentMat2(*(x * other for x in self.entries()))

    def __pow__(self, n: int) -> "LaurentMat2":
        if n < 0:
            return mat_inverse(self) ** (-n)
        result = IDENTITY
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def det(self) -> LaurentL:
        return self.e11 * self.e22 - self.e12 * self.e21

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentMat2) and self.entries() == other.entries()

    def __hash__(self) -> int:
        return hash(self.entries())

    def __str__(self) -> str:
        cells = [str(x) for x in self.entries()]
        w = max(len(c) for c in cells)
        return (f"[ {cells[0]:<{w}}  {cells[1]:<{w}} ]\n"
                f"[ {cells[2]:<{w}}  {cells[3]:<{w}} ]")

    def to_json(self) -> list:
        return [[self.e11.to_json(), self.e12.to_json()],
                [self.e21.to_json(), self.e22.to_json()]]


IDENTITY = LaurentMat2.scalar(ONE)


def mat_inverse(x: LaurentMat2) -> LaurentMat2:
    """Inverse over the Laurent ring; requires ``det(x) = c * lam^k``."""
    d = x.det()
    if not d.is_unit():
        raise NonUnitDeterminant(f"determinant {d} is not a unit")
    (e, c), = d.terms.items()
    inv = LaurentL.lam(-e, ONE / c)
    return LaurentMat2(x.e22 * inv, -x.e12 * inv, -x.e21 * inv, x.e11 * inv)


@lru_cache(maxsize=1)
def named_matrices() -> Dict[str, LaurentMat2]:
    lam, inv, one_ = LaurentL.lam(1), LaurentL.lam(-1), LaurentL.const(ONE)
    mats = {
        "A": LaurentMat2(lam, one_ - inv, LaurentL(), inv),
        "B": LaurentMat2(inv, LaurentL(), lam - one_, lam),
        "C": LaurentMat2(one_, one_ - lam, inv - one_, lam + inv - one_),
        "p": LaurentMat2.of([[0, -1], [1, 1]]),
        "s": LaurentMat2(LaurentL(), one_, lam, LaurentL()),
        "I": IDENTITY,
    }
    return mats


@lru_cache(maxsize=1)
def pi_generators() -> Tuple[LaurentMat2, ...]:
    """Images of ``A, B, C, al, be, ga``."""
    mats = named_matrices()
    q, qi = q_power(1), q_power(-1)
    out = [mats[n] * q + mat_inverse(mats[n]) * qi for n in "ABC"]
    central = LaurentMat2.scalar(nu())
    return tuple(out) + (central, central, central)


@lru_cache(maxsize=None)
def _gen_power(idx: int, n: int) -> LaurentMat2:
    if n == 0:
        return IDENTITY
    if n == 1:
        return pi_generators()[idx]
    half = _gen_power(idx, n // 2)
    sq = half * half
    return sq * pi_generators()[idx] if n % 2 else sq


def _pi_monomial(m: PBWMonomial) -> LaurentMat2:
    v = IDENTITY
    for idx, e in enumerate(m[:3]):
        if e:
            v = v * _gen_power(idx, e)
    g = m.r + m.s + m.t
    if g:
        v = v * _gen_power(3, g)
    return v


def pi(x: DeltaElement) -> LaurentMat2:
    """The homomorphism into 2x2 Laurent matrices."""
    out = LaurentMat2.scalar(ZERO)
    for m, c in x.terms.items():
        out = out + _pi_monomial(m) * c
    return out


def _conjugator(word: str) -> LaurentMat2:
    from .morphism import parse_automorphism_word

    mats = named_matrices()
    p, s = mats["p"], mats["s"]
    table = {"r": p, "R": mat_inverse(p), "s": s}
    g = IDENTITY
    for ch in parse_automorphism_word(word):
        g = g * table[ch]
    return g


def psl2z_on_lambda(word: str, m: LaurentMat2) -> LaurentMat2:
    """Conjugate ``m`` by the product of ``p``, ``p^-1``, ``s`` spelled by ``word``."""
    g = _conjugator(word)
    return g * m * mat_inverse(g)


def is_central_lambda(m: LaurentMat2) -> bool:
    return m.e12.is_zero() and m.e21.is_zero() and m.e11 == m.e22


def alternating_words(max_len: int) -> Iterator[Tuple[str, ...]]:
    """Words alternating ``s`` with one of ``p``, ``P`` (= p^-1), lengths 1..max_len."""
    for n in range(1, max_len + 1):
        for s_first in (True, False):
            slots = [(i % 2 == 0) == s_first for i in range(n)]
            nps = slots.count(False)
            for choice in product("pP", repeat=nps):
                it = iter(choice)
                yield tuple("s" if is_s else next(it) for is_s in slots)


@dataclass
class FaithfulnessReport:
    max_len: int
    checked: int = 0
    violations: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __str__(self) -> str:
        return (f"{self.checked} alternating words up to length {self.max_len}; "
                f"{len(self.violations)} central")


def faithfulness_probe(max_len: int = 8) -> FaithfulnessReport:
    if max_len < 1:
        raise ValueError("max_len must be at least 1")
    mats = named_matrices()
    table = {"s": mats["s"], "p": mats["p"], "P": mat_inverse(mats["p"])}
    report = FaithfulnessReport(max_len)
    for w in alternating_words(max_len):
        m = IDENTITY
        for ch in w:
            m = m * table[ch]
        report.checked += 1
        if is_central_lambda(m):
            report.violations.append("".join(w))
    return report


def verify_commuting_diagram(gen: str, x: DeltaElement) -> bool:
    """``pi(g(x)) == g(pi(x))`` for ``g`` in ``r``, ``R``, ``s``."""
    from .morphism import psl2z_word

    return pi(psl2z_word(gen, x)) == psl2z_on_lambda(gen, pi(x))
