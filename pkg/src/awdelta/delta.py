"""Elements of the universal Askey-Wilson algebra in PBW normal form.

An element is a finite sum of monomials ``A^i B^j C^k al^r be^s ga^t`` with
coefficients in Q(q).  Products are computed by concatenating monomials as
words and handing them to the reduction system in :mod:`awdelta.rewrite`.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Dict, Iterable, Iterator, List, Mapping, NamedTuple, Tuple

from .freeword import Letter, Word
from .qfield import ONE, ZERO, RatFuncQ, as_ratfunc, q_integer, q_power
from .rewrite import normal_form_terms

__all__ = [
    "PBWMonomial",
    "DeltaElement",
    "OmegaMonomial",
    "OmegaElement",
    "NEG_INF",
    "generators",
    "A", "B", "C", "alpha", "beta", "gamma", "one",
    "multiply",
    "commutator",
    "casimir_variants",
    "casimir",
    "casimir_power",
    "product_of",
    "filtration_degree",
    "coefficient_of",
    "to_omega_basis",
    "from_omega_basis",
    "is_central",
    "verify_presentation_identities",
    "monomials_up_to",
]

NEG_INF = float("-inf")

_NAMES = ("A", "B", "C", "al", "be", "ga")


class PBWMonomial(NamedTuple):
    i: int = 0
    j: int = 0
    k: int = 0
    r: int = 0
    s: int = 0
    t: int = 0

    @property
    def degree(self) -> int:
        return self.i + self.j + self.k + self.r + self.s + self.t

    def to_word(self) -> Word:
        out: List[Letter] = []
        for letter, e in zip(Letter, self):
            out.extend([letter] * e)
        return tuple(out)

    @classmethod
    def from_word(cls, w: Iterable[Letter]) -> "PBWMonomial":
        counts = [0] * 6
        for x in w:
            counts[x] += 1
        return cls(*counts)

    def render(self) -> str:
        parts = []
        for name, e in zip(_NAMES, self):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return " ".join(parts) or "1"

    def sort_key(self) -> Tuple:
        return (self.degree, tuple(self))


def _render_term(mono_text: str, c: RatFuncQ) -> str:
    if mono_text == "1":
        return str(c) if c.is_single_term() else f"({c})"
    if c.is_one():
        return mono_text
    if c.is_single_term():
        return f"{c} * {mono_text}"
    return f"({c}) * {mono_text}"


class DeltaElement:
    """A PBW-normal-form element; ``terms`` maps monomials to nonzero coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Tuple[int, ...], object] | None = None):
        clean: Dict[PBWMonomial, RatFuncQ] = {}
        for m, c in (terms or {}).items():
            c = as_ratfunc(c)
            if c:
                clean[PBWMonomial(*m)] = c
        self.terms = clean

    @classmethod
    def _raw(cls, terms: Dict[PBWMonomial, RatFuncQ]) -> "DeltaElement":
        obj = cls.__new__(cls)
        obj.terms = terms
        return obj

    @classmethod
    def from_words(cls, terms: Mapping[Word, RatFuncQ]) -> "DeltaElement":
        out: Dict[PBWMonomial, RatFuncQ] = {}
        for w, c in terms.items():
            m = PBWMonomial.from_word(w)
            v = out.get(m)
            out[m] = c if v is None else v + c
        return cls._raw({m: c for m, c in out.items() if c})

    @classmethod
    def scalar(cls, c) -> "DeltaElement":
        return cls({PBWMonomial(): c})

    @classmethod
    def monomial(cls, *exps: int, coeff=ONE) -> "DeltaElement":
        return cls({PBWMonomial(*exps): coeff})

    # queries ----------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_scalar(self) -> bool:
        return all(m == PBWMonomial() for m in self.terms)

    def scalar_part(self) -> RatFuncQ:
        return self.terms.get(PBWMonomial(), ZERO)

    def degree(self) -> float:
        return filtration_degree(self)

    def sorted_terms(self) -> List[Tuple[PBWMonomial, RatFuncQ]]:
        return sorted(self.terms.items(), key=lambda mc: mc[0].sort_key())

    # arithmetic -------------------------------------------------------
    def __add__(self, other) -> "DeltaElement":
        other = _coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m)
            v = c if v is None else v + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return DeltaElement._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "DeltaElement":
        return DeltaElement._raw({m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "DeltaElement":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "DeltaElement":
        return _coerce(other) - self

    def scale(self, c) -> "DeltaElement":
        c = as_ratfunc(c)
        if not c:
            return DeltaElement._raw({})
        return DeltaElement._raw({m: v * c for m, v in self.terms.items()})

    def __mul__(self, other) -> "DeltaElement":
        if isinstance(other, DeltaElement):
            return multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other) -> "DeltaElement":
        return self.scale(other)

    def __truediv__(self, other) -> "DeltaElement":
        return self.scale(ONE / as_ratfunc(other))

    def __pow__(self, n: int) -> "DeltaElement":
        if n < 0:
            raise ValueError("negative powers are not defined in Delta")
        result = one
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, DeltaElement):
            return self.terms == other.terms
        try:
            return self.terms == _coerce(other).terms
        except TypeError:
            return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    # text / json ------------------------------------------------------
    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(_render_term(m.render(), c) for m, c in self.sorted_terms())

    def __repr__(self) -> str:
        return f"DeltaElement({str(self)!r})"

    def to_json(self) -> dict:
        return {"terms": [{"mono": list(m), "coeff": c.to_json()} for m, c in self.sorted_terms()]}

    @classmethod
    def from_json(cls, data: Mapping) -> "DeltaElement":
        return cls({tuple(t["mono"]): RatFuncQ.from_json(t["coeff"]) for t in data["terms"]})


def _coerce(x) -> DeltaElement:
    if isinstance(x, DeltaElement):
        return x
    return DeltaElement.scalar(as_ratfunc(x))


# ---------------------------------------------------------------------------
# generators and products
# ---------------------------------------------------------------------------

A = DeltaElement.monomial(1, 0, 0, 0, 0, 0)
B = DeltaElement.monomial(0, 1, 0, 0, 0, 0)
C = DeltaElement.monomial(0, 0, 1, 0, 0, 0)
alpha = DeltaElement.monomial(0, 0, 0, 1, 0, 0)
beta = DeltaElement.monomial(0, 0, 0, 0, 1, 0)
gamma = DeltaElement.monomial(0, 0, 0, 0, 0, 1)
one = DeltaElement.monomial(0, 0, 0, 0, 0, 0)


def generators() -> Dict[str, DeltaElement]:
    return {"A": A, "B": B, "C": C, "alpha": alpha, "beta": beta, "gamma": gamma, "one": one}


@lru_cache(maxsize=None)
def _monomial_product(m1: PBWMonomial, m2: PBWMonomial) -> Tuple[Tuple[PBWMonomial, RatFuncQ], ...]:
    if _sorted_concat(m1, m2):
        return ((PBWMonomial(*(a + b for a, b in zip(m1, m2))), ONE),)
    nf = normal_form_terms(m1.to_word() + m2.to_word())
    return tuple((PBWMonomial.from_word(w), c) for w, c in nf.items())


def _sorted_concat(m1: PBWMonomial, m2: PBWMonomial) -> bool:
    """True when the concatenated word is already irreducible."""
    last = max((i for i in range(6) if m1[i]), default=-1)
    first = min((i for i in range(6) if m2[i]), default=6)
    return last <= first


def multiply(x: DeltaElement, y: DeltaElement) -> DeltaElement:
    out: Dict[PBWMonomial, RatFuncQ] = {}
    for m1, c1 in x.terms.items():
        for m2, c2 in y.terms.items():
            c12 = c1 * c2
            for m, c in _monomial_product(m1, m2):
                v = c12 if c.is_one() else c12 * c
                old = out.get(m)
                out[m] = v if old is None else old + v
    return DeltaElement._raw({m: c for m, c in out.items() if c})


def commutator(x: DeltaElement, y: DeltaElement) -> DeltaElement:
    return multiply(x, y) - multiply(y, x)


def product_of(*factors: DeltaElement) -> DeltaElement:
    result = one
    for f in factors:
        result = multiply(result, f)
    return result


# ---------------------------------------------------------------------------
# Casimir element
# ---------------------------------------------------------------------------

def _q(e: int) -> RatFuncQ:
    return q_power(e)


def casimir_variants() -> List[DeltaElement]:
    """The six displayed expressions for the Casimir element, normalized."""
    P = product_of
    sq = lambda x: x * x  # noqa: E731
    exprs = [
        (P(A, B, C), 1, (2, -2, 2), (1, -1, 1)),
        (P(B, C, A), 1, (2, 2, -2), (1, 1, -1)),
        (P(C, A, B), 1, (-2, 2, 2), (-1, 1, 1)),
        (P(C, B, A), -1, (-2, 2, -2), (-1, 1, -1)),
        (P(A, C, B), -1, (-2, -2, 2), (-1, -1, 1)),
        (P(B, A, C), -1, (2, -2, -2), (1, -1, -1)),
    ]
    out = []
    for cubic, e0, sq_exps, lin_exps in exprs:
        v = cubic.scale(_q(e0))
        for gen, e in zip((A, B, C), sq_exps):
            v = v + sq(gen).scale(_q(e))
        for gen, greek, e in zip((A, B, C), (alpha, beta, gamma), lin_exps):
            v = v - (gen * greek).scale(_q(e))
        out.append(v)
    return out


@lru_cache(maxsize=1)
def casimir() -> DeltaElement:
    """``q ABC + q^2 A^2 + q^-2 B^2 + q^2 C^2 - q A al - q^-1 B be - q C ga``."""
    return casimir_variants()[0]


@lru_cache(maxsize=None)
def casimir_power(n: int) -> DeltaElement:
    if n == 0:
        return one
    if n == 1:
        return casimir()
    return multiply(casimir_power(n - 1), casimir())


# ---------------------------------------------------------------------------
# filtration and coefficients
# ---------------------------------------------------------------------------

def filtration_degree(x: DeltaElement) -> float:
    """Largest total exponent among contributing monomials; ``NEG_INF`` for 0."""
    if not x.terms:
        return NEG_INF
    return max(m.degree for m in x.terms)


def coefficient_of(x: DeltaElement, m: Tuple[int, ...] | DeltaElement) -> RatFuncQ:
    if isinstance(m, DeltaElement):
        if len(m.terms) != 1:
            raise ValueError("expected a single monomial")
        (m,) = m.terms
    return x.terms.get(PBWMonomial(*m), ZERO)


def monomials_up_to(n: int, nvars: int = 6) -> Iterator[Tuple[int, ...]]:
    """All exponent tuples of length ``nvars`` with sum at most ``n``."""
    def rec(k: int, budget: int) -> Iterator[Tuple[int, ...]]:
        if k == 0:
            yield ()
            return
        for e in range(budget + 1):
            for rest in rec(k - 1, budget - e):
                yield (e,) + rest

    yield from sorted(rec(nvars, n), key=lambda t: (sum(t), t))


# ---------------------------------------------------------------------------
# Omega basis
# ---------------------------------------------------------------------------

class OmegaMonomial(NamedTuple):
    i: int = 0
    j: int = 0
    k: int = 0
    l: int = 0  # noqa: E741
    r: int = 0
    s: int = 0
    t: int = 0

    @property
    def degree(self) -> int:
        return self.i + self.j + self.k + 3 * self.l + self.r + self.s + self.t

    def render(self) -> str:
        parts = []
        for name, e in zip(("A", "B", "C", "Om", "al", "be", "ga"), self):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return " ".join(parts) or "1"


class OmegaElement:
    """A combination of monomials ``A^i B^j C^k Om^l al^r be^s ga^t`` with ``ijk = 0``."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Tuple[int, ...], object] | None = None):
        clean: Dict[OmegaMonomial, RatFuncQ] = {}
        for m, c in (terms or {}).items():
            m = OmegaMonomial(*m)
            if min(m.i, m.j, m.k) != 0:
                raise ValueError(f"Omega-basis monomial needs ijk = 0, got {tuple(m)}")
            c = as_ratfunc(c)
            if c:
                clean[m] = c
        self.terms = clean

    def __eq__(self, other) -> bool:
        return isinstance(other, OmegaElement) and self.terms == other.terms

    def __add__(self, other: "OmegaElement") -> "OmegaElement":
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, ZERO) + c
        return OmegaElement(out)

    def sorted_terms(self) -> List[Tuple[OmegaMonomial, RatFuncQ]]:
        return sorted(self.terms.items(), key=lambda mc: (mc[0].degree, tuple(mc[0])))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(_render_term(m.render(), c) for m, c in self.sorted_terms())

    def __repr__(self) -> str:
        return f"OmegaElement({str(self)!r})"


@lru_cache(maxsize=None)
def _expand_omega_monomial(m: OmegaMonomial) -> DeltaElement:
    head = DeltaElement.monomial(m.i, m.j, m.k)
    tail = DeltaElement.monomial(0, 0, 0, m.r, m.s, m.t)
    return multiply(multiply(head, casimir_power(m.l)), tail)


def from_omega_basis(x: OmegaElement) -> DeltaElement:
    out = DeltaElement()
    for m, c in x.terms.items():
        out = out + _expand_omega_monomial(m).scale(c)
    return out


def to_omega_basis(x: DeltaElement) -> OmegaElement:
    """Rewrite ``x`` in the Omega basis by back-substitution down the filtration.

    The expansion of ``A^i' B^j' C^k' Om^l al^r be^s ga^t`` has a single
    monomial of top degree, namely ``A^(i'+l) B^(j'+l) C^(k'+l) al^r be^s ga^t``
    with a unit coefficient ``c q^e``; so each top-degree term of ``x`` is
    cleared by subtracting one expanded Omega monomial.
    """
    rest = x
    out: Dict[OmegaMonomial, RatFuncQ] = {}
    while rest.terms:
        m = max(rest.terms, key=PBWMonomial.sort_key)
        ell = min(m.i, m.j, m.k)
        om = OmegaMonomial(m.i - ell, m.j - ell, m.k - ell, ell, m.r, m.s, m.t)
        expansion = _expand_omega_monomial(om)
        lead = expansion.terms[m]
        c = rest.terms[m] / lead
        out[om] = out.get(om, ZERO) + c
        rest = rest - expansion.scale(c)
    return OmegaElement(out)


# ---------------------------------------------------------------------------
# center and the alternate presentation
# ---------------------------------------------------------------------------

def is_central(x: DeltaElement) -> bool:
    """Exact test: ``A``, ``B``, ``C`` generate the algebra."""
    return all(commutator(x, g).is_zero() for g in (A, B, C))


def verify_presentation_identities() -> Dict[str, bool]:
    """Check the recovery formulas and the relations in ``A``, ``B``, ``ga``."""
    qm = _q(1) - _q(-1)
    qp = _q(1) + _q(-1)
    q2m = _q(2) - _q(-2)
    q2p = _q(2) + _q(-2)
    three = q_integer(3)
    P = product_of
    AB = P(A, B)
    BA = P(B, A)
    results: Dict[str, bool] = {}

    c_formula = gamma / qp - (AB.scale(_q(1)) - BA.scale(_q(-1))) / q2m
    results["recover C"] = c_formula == C

    denom = qm * q2m
    al_formula = (P(B, B, A) - P(B, A, B).scale(q2p) + P(A, B, B)
                  + A.scale(q2m * q2m) + P(B, gamma).scale(qm * qm)) / denom
    results["recover alpha"] = al_formula == alpha
    be_formula = (P(A, A, B) - P(A, B, A).scale(q2p) + P(B, A, A)
                  + B.scale(q2m * q2m) + P(A, gamma).scale(qm * qm)) / denom
    results["recover beta"] = be_formula == beta

    def tridiagonal(x, y):
        lhs = (P(x, x, x, y) - P(x, x, y, x).scale(three)
               + P(x, y, x, x).scale(three) - P(y, x, x, x))
        rhs = (P(x, y) - P(y, x)).scale(-(q2m * q2m))
        return lhs == rhs

    results["tridiagonal A,B"] = tridiagonal(A, B)
    results["tridiagonal B,A"] = tridiagonal(B, A)
    lhs = P(A, A, B, B) - P(B, B, A, A) + (P(B, A, B, A) - P(A, B, A, B)).scale(q2p)
    rhs = P(AB - BA, gamma).scale(-(qm * qm))
    results["gamma relation"] = lhs == rhs
    results["gamma A = A gamma"] = P(gamma, A) == P(A, gamma)
    results["gamma B = B gamma"] = P(gamma, B) == P(B, gamma)
    return results
