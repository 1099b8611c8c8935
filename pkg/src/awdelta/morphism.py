"""Algebra maps out of and on the universal Askey-Wilson algebra.

Covers the modular group action generated by ``rho`` (order 3) and ``sigma``
(order 2), the three sign-flip automorphisms, specialization of the central
generators to scalars, and abelianization onto ``Q(q)[Ab, Bb, Cb]`` together
with the membership tests it decides.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterable, List, Mapping, Tuple

from .delta import (
    A, B, C, DeltaElement, PBWMonomial, alpha, beta, gamma, is_central, multiply, one,
)
from .qfield import ONE, ZERO, RatFuncQ, as_ratfunc, q_power

__all__ = [
    "GeneratorImages",
    "CommPoly",
    "apply_endo",
    "rho_images",
    "sigma_images",
    "rho",
    "sigma",
    "psl2z_word",
    "parse_automorphism_word",
    "klein_flip",
    "klein_images",
    "specialize_aw",
    "abelianize",
    "in_commutator_ideal",
    "in_commutator_ideal_plus_1",
    "in_subalgebra",
    "triple_intersection_check",
    "permutation_of_word",
    "in_kernel_to_s3",
    "is_fixed_by",
]


@dataclass(frozen=True)
class GeneratorImages:
    """Images of ``A, B, C, al, be, ga`` under an algebra map."""

    imgA: DeltaElement
    imgB: DeltaElement
    imgC: DeltaElement
    imgAlpha: DeltaElement
    imgBeta: DeltaElement
    imgGamma: DeltaElement

    def as_tuple(self) -> Tuple[DeltaElement, ...]:
        return (self.imgA, self.imgB, self.imgC, self.imgAlpha, self.imgBeta, self.imgGamma)

    def check_relations(self) -> bool:
        """The images satisfy the defining relations, with the given central parts."""
        qp = q_power(1) + q_power(-1)
        q2m = q_power(2) - q_power(-2)
        a, b, c, al, be, ga = self.as_tuple()
        for x, y, z, g in ((a, b, c, al), (b, c, a, be), (c, a, b, ga)):
            lhs = x + (multiply(y, z).scale(q_power(1)) - multiply(z, y).scale(q_power(-1))) / q2m
            if lhs != g / qp or not is_central(g):
                return False
        return True


def apply_endo(images: GeneratorImages, x: DeltaElement) -> DeltaElement:
    """Evaluate ``x`` with each generator replaced by its image."""
    imgs = images.as_tuple()
    powers: List[Dict[int, DeltaElement]] = [{0: one, 1: img} for img in imgs]

    def power(idx: int, n: int) -> DeltaElement:
        cache = powers[idx]
        if n not in cache:
            cache[n] = multiply(power(idx, n - 1), imgs[idx])
        return cache[n]

    out = DeltaElement()
    for m, c in x.terms.items():
        v = one
        for idx, e in enumerate(m):
            if e:
                v = multiply(v, power(idx, e))
        out = out + v.scale(c)
    return out


@lru_cache(maxsize=1)
def rho_images() -> GeneratorImages:
    return GeneratorImages(B, C, A, beta, gamma, alpha)


@lru_cache(maxsize=1)
def sigma_images() -> GeneratorImages:
    qm = q_power(1) - q_power(-1)
    img_c = C + (multiply(A, B) - multiply(B, A)) / qm
    return GeneratorImages(B, A, img_c, beta, alpha, gamma)


def rho(x: DeltaElement) -> DeltaElement:
    return apply_endo(rho_images(), x)


def sigma(x: DeltaElement) -> DeltaElement:
    return apply_endo(sigma_images(), x)


def parse_automorphism_word(word: str) -> str:
    """Validate a word over ``r`` (rho), ``R`` (rho^-1) and ``s`` (sigma)."""
    table = {"ρ": "r", "σ": "s"}
    out = []
    for ch in word.replace("ρ⁻¹", "R"):
        ch = table.get(ch, ch)
        if ch in " *":
            continue
        if ch not in "rRs":
            raise ValueError(f"unknown automorphism letter {ch!r} in {word!r}")
        out.append(ch)
    return "".join(out)


def psl2z_word(word: str, x: DeltaElement) -> DeltaElement:
    """Apply ``g1 g2 ... gn`` to ``x``; the rightmost letter acts first."""
    for ch in reversed(parse_automorphism_word(word)):
        if ch == "r":
            x = rho(x)
        elif ch == "R":
            x = rho(rho(x))
        else:
            x = sigma(x)
    return x


_FLIP_SIGNS = {
    # exponents of A, B, C, al, be, ga that change sign
    "A": (0, 1, 1, 0, 1, 1),
    "B": (1, 0, 1, 1, 0, 1),
    "C": (1, 1, 0, 1, 1, 0),
}


def klein_flip(fixed: str, x: DeltaElement) -> DeltaElement:
    """Automorphism fixing one of ``A, B, C`` and negating the other two.

    The central generators follow from the defining relations: fixing ``A``
    sends ``al, be, ga`` to ``al, -be, -ga``, and similarly for ``B``, ``C``.
    """
    signs = _FLIP_SIGNS[fixed]
    out = {}
    for m, c in x.terms.items():
        odd = sum(e * s for e, s in zip(m, signs)) % 2
        out[m] = -c if odd else c
    return DeltaElement._raw(out)


def klein_images(fixed: str) -> GeneratorImages:
    gens = (A, B, C, alpha, beta, gamma)
    return GeneratorImages(*(-g if s else g for g, s in zip(gens, _FLIP_SIGNS[fixed])))


def specialize_aw(x: DeltaElement, a, b, c) -> DeltaElement:
    """Send ``al, be, ga`` to the scalars ``a, b, c``."""
    a, b, c = as_ratfunc(a), as_ratfunc(b), as_ratfunc(c)
    out: Dict[PBWMonomial, RatFuncQ] = {}
    for m, coeff in x.terms.items():
        v = coeff * a ** m.r * b ** m.s * c ** m.t
        key = PBWMonomial(m.i, m.j, m.k)
        out[key] = out.get(key, ZERO) + v
    return DeltaElement(out)


# ---------------------------------------------------------------------------
# abelianization
# ---------------------------------------------------------------------------

class CommPoly:
    """Commutative polynomial in ``Ab, Bb, Cb`` over Q(q)."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Tuple[int, int, int], object] | None = None):
        clean = {}
        for m, c in (terms or {}).items():
            c = as_ratfunc(c)
            if c:
                clean[tuple(m)] = c
        self.terms: Dict[Tuple[int, int, int], RatFuncQ] = clean

    @classmethod
    def const(cls, c) -> "CommPoly":
        return cls({(0, 0, 0): c})

    def __add__(self, other: "CommPoly") -> "CommPoly":
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, ZERO) + c
        return CommPoly(out)

    def __neg__(self) -> "CommPoly":
        return CommPoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "CommPoly") -> "CommPoly":
        return self + (-other)

    def __mul__(self, other) -> "CommPoly":
        if not isinstance(other, CommPoly):
            c = as_ratfunc(other)
            return CommPoly({m: v * c for m, v in self.terms.items()})
        out: Dict[Tuple[int, int, int], RatFuncQ] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = (m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2])
                out[m] = out.get(m, ZERO) + c1 * c2
        return CommPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "CommPoly":
        result = CommPoly.const(ONE)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        return isinstance(other, CommPoly) and self.terms == other.terms

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(m == (0, 0, 0) for m in self.terms)

    def variables(self) -> set:
        """Names among ``Ab, Bb, Cb`` that occur with positive exponent."""
        used = set()
        for m in self.terms:
            for name, e in zip(("Ab", "Bb", "Cb"), m):
                if e:
                    used.add(name)
        return used

    def permute(self, perm: Tuple[int, int, int]) -> "CommPoly":
        """Substitute variable ``v`` by variable ``perm[v]``."""
        out = {}
        for m, c in self.terms.items():
            new = [0, 0, 0]
            for v, e in enumerate(m):
                new[perm[v]] += e
            out[tuple(new)] = c
        return CommPoly(out)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in sorted(self.terms.items(), key=lambda mc: (sum(mc[0]), mc[0])):
            mono = " ".join(
                name if e == 1 else f"{name}^{e}"
                for name, e in zip(("Ab", "Bb", "Cb"), m) if e
            ) or "1"
            if mono == "1":
                parts.append(str(c) if c.is_single_term() else f"({c})")
            elif c.is_one():
                parts.append(mono)
            elif c.is_single_term():
                parts.append(f"{c} * {mono}")
            else:
                parts.append(f"({c}) * {mono}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"CommPoly({str(self)!r})"


AB_BAR = CommPoly({(1, 0, 0): 1})
BB_BAR = CommPoly({(0, 1, 0): 1})
CB_BAR = CommPoly({(0, 0, 1): 1})


@lru_cache(maxsize=1)
def _greek_bars() -> Tuple[CommPoly, CommPoly, CommPoly]:
    qp = q_power(1) + q_power(-1)
    return (
        AB_BAR * qp + BB_BAR * CB_BAR,
        BB_BAR * qp + CB_BAR * AB_BAR,
        CB_BAR * qp + AB_BAR * BB_BAR,
    )


def abelianize(x: DeltaElement) -> CommPoly:
    """Image of ``x`` under ``A, B, C -> Ab, Bb, Cb``."""
    bars = _greek_bars()
    out = CommPoly()
    for m, c in x.terms.items():
        v = CommPoly({(m.i, m.j, m.k): c})
        for g, e in zip(bars, (m.r, m.s, m.t)):
            if e:
                v = v * g ** e
        out = out + v
    return out


def in_commutator_ideal(x: DeltaElement) -> bool:
    return abelianize(x).is_zero()


def in_commutator_ideal_plus_1(x: DeltaElement) -> bool:
    return abelianize(x).is_constant()


_PAIR_VARS = {"AB": {"Ab", "Bb"}, "BC": {"Bb", "Cb"}, "AC": {"Ab", "Cb"}}


def in_subalgebra(x: DeltaElement, pair: str) -> bool:
    """Membership in the subalgebra generated by the two named generators."""
    pair = "AC" if pair == "CA" else pair
    return abelianize(x).variables() <= _PAIR_VARS[pair]


def triple_intersection_check(x: DeltaElement) -> bool:
    return all(in_subalgebra(x, p) for p in ("AB", "BC", "AC"))


# ---------------------------------------------------------------------------
# the induced permutation action on Ab, Bb, Cb
# ---------------------------------------------------------------------------

_LETTER_PERMS = {
    "r": (1, 2, 0),
    "R": (2, 0, 1),
    "s": (1, 0, 2),
}


def permutation_of_word(word: str) -> Tuple[int, int, int]:
    """Where ``g`` sends ``(Ab, Bb, Cb)``, as indices (0, 1, 2)."""
    perm = (0, 1, 2)
    for ch in reversed(parse_automorphism_word(word)):
        step = _LETTER_PERMS[ch]
        perm = tuple(step[perm[v]] for v in range(3))
    return perm


def in_kernel_to_s3(word: str) -> bool:
    """True when ``word`` lies in the kernel of the action on ``{Ab, Bb, Cb}``."""
    return permutation_of_word(word) == (0, 1, 2)


def is_fixed_by(word: str, x: DeltaElement) -> bool:
    return psl2z_word(word, x) == x


def sample_words(letters: Iterable[DeltaElement], max_len: int) -> List[DeltaElement]:
    """All products of up to ``max_len`` of the given elements (with repeats)."""
    letters = list(letters)
    out = [one]
    frontier = [one]
    for _ in range(max_len):
        frontier = [multiply(w, g) for w in frontier for g in letters]
        out.extend(frontier)
    return out
