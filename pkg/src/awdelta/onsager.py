"""The q-Onsager algebra, seen through the algebra Delta and matrix modules.

The abstract algebra on ``X, Y`` is never built.  Statements about it are
checked either after ``X -> A, Y -> B`` or on explicit matrices; the generic
helpers here accept any operands supporting ``+``, ``-``, ``*`` (product)
and ``.scale(c)``.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Tuple

import numpy as np

from .delta import A, B, DeltaElement, commutator, multiply
from .qfield import ONE, ZERO, Q, RatFuncQ, q_power

__all__ = [
    "MatN",
    "check_tridiagonal",
    "tridiagonal_defects",
    "xi1",
    "xi2",
    "xi1_delta",
    "xi2_delta",
    "vidar_module",
    "theta",
    "vartheta",
    "xi_commutator_matrix",
    "xi_commutator_entry",
    "nested_bracket_forms",
    "nested_bracket_check",
    "xi_commute_in_delta",
    "kernel_element_delta",
]


class MatN:
    """Square matrix with exact entries (``RatFuncQ`` or ``Fraction``)."""

    __slots__ = ("a",)

    def __init__(self, rows):
        a = np.array(rows, dtype=object)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError(f"expected a square matrix, got shape {a.shape}")
        self.a = a

    @property
    def n(self) -> int:
        return self.a.shape[0]

    @classmethod
    def zeros(cls, n: int, zero=ZERO) -> "MatN":
        return cls([[zero] * n for _ in range(n)])

    def _check(self, other: "MatN") -> None:
        if self.n != other.n:
            raise ValueError(f"dimension mismatch: {self.n} vs {other.n}")

    def __add__(self, other: "MatN") -> "MatN":
        self._check(other)
        return MatN(self.a + other.a)

    def __sub__(self, other: "MatN") -> "MatN":
        self._check(other)
        return MatN(self.a - other.a)

    def __neg__(self) -> "MatN":
        return MatN(-self.a)

    def __mul__(self, other: "MatN") -> "MatN":
        self._check(other)
        return MatN(self.a.dot(other.a))

    def scale(self, c) -> "MatN":
        return MatN(self.a * c)

    def __getitem__(self, ij: Tuple[int, int]):
        return self.a[ij]

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.a.flat)

    def __eq__(self, other) -> bool:
        return isinstance(other, MatN) and self.n == other.n and all(
            x == y for x, y in zip(self.a.flat, other.a.flat))

    def __str__(self) -> str:
        return "\n".join("[ " + ", ".join(str(x) for x in row) + " ]" for row in self.a)


def _qops(qv):
    """Scalars used by the relations, for symbolic ``q`` or a rational value."""
    if isinstance(qv, RatFuncQ):
        return qv, ONE / qv
    qv = Fraction(qv)
    return qv, 1 / qv


def _prod(*factors):
    out = factors[0]
    for f in factors[1:]:
        out = out * f
    return out


def tridiagonal_defects(x, y, qv=Q):
    """Left minus right side of both tridiagonal relations."""
    q, qi = _qops(qv)
    three = q * q + 1 + qi * qi
    c = (q * q - qi * qi) * (q * q - qi * qi)
    P = _prod

    def defect(u, v):
        lhs = P(u, u, u, v) - P(u, u, v, u).scale(three) + P(u, v, u, u).scale(three) - P(v, u, u, u)
        return lhs + (P(u, v) - P(v, u)).scale(c)

    return defect(x, y), defect(y, x)


def check_tridiagonal(x, y, qv=Q) -> bool:
    if isinstance(x, MatN) and isinstance(y, MatN):
        x._check(y)
    d1, d2 = tridiagonal_defects(x, y, qv)
    return d1.is_zero() and d2.is_zero()


def xi1(x, y):
    return x * y - y * x


def xi2(x, y, qv=Q):
    q, qi = _qops(qv)
    P = _prod
    return (P(x, x, y, y) - P(y, y, x, x)
            + (P(y, x, y, x) - P(x, y, x, y)).scale(q * q + qi * qi))


def xi1_delta() -> DeltaElement:
    return xi1(A, B)


def xi2_delta() -> DeltaElement:
    return xi2(A, B)


def theta(i: int) -> RatFuncQ:
    return q_power(2 * i) + q_power(-2 * i)


def vartheta() -> RatFuncQ:
    qm = q_power(1) - q_power(-1)
    return (q_power(4) - q_power(-4)) * (q_power(2) - q_power(-2)) * qm * qm


def vidar_module() -> Tuple[MatN, MatN]:
    """The 4-dimensional module: matrices for ``X`` and ``Y``."""
    t0, t1, t2 = theta(0), theta(1), theta(2)
    z, o = ZERO, ONE
    X = MatN([
        [t0, z, z, z],
        [o, t1, z, z],
        [z, z, t1, z],
        [z, o, z, t2],
    ])
    Y = MatN([
        [t0, vartheta(), Q, z],
        [z, t1, z, z],
        [z, z, t1, o],
        [z, z, z, t2],
    ])
    return X, Y


def xi_commutator_matrix(z: str = "X") -> MatN:
    """``xi1 Z xi2 - xi2 Z xi1`` on the four-dimensional module, ``Z`` one of ``X``, ``Y``."""
    X, Y = vidar_module()
    s1, s2 = xi1(X, Y), xi2(X, Y)
    zm = {"X": X, "Y": Y}[z]
    return s1 * zm * s2 - s2 * zm * s1


def xi_commutator_entry() -> RatFuncQ:
    """The (4,3) entry of ``xi1 X xi2 - xi2 X xi1`` on the four-dimensional module."""
    return xi_commutator_matrix("X")[3, 2]


def _bracket(u, v, eps, eps_inv):
    return (u * v).scale(eps) - (v * u).scale(eps_inv)


def nested_bracket_forms(x, y, qv=Q):
    """Three expressions that must coincide for any ``x``, ``y``.

    Returns ``[3]_q`` times the commutator ``[xi1, xi2]``, ``[3]_q`` times its
    expansion into words of length 6, and the sum of the two nested
    q-brackets ``[y,[y,[x,[x,[x,y]]_q]_q^-1]_q]_q^-1 + (x <-> y)``.
    """
    q, qi = _qops(qv)
    three = q * q + 1 + qi * qi
    P = _prod
    s1, s2 = xi1(x, y), xi2(x, y, qv)
    raw = (s1 * s2 - s2 * s1).scale(three)

    expansion = (
        P(x, y, x, x, y, y) - P(x, x, y, y, x, y) + P(y, x, y, y, x, x) - P(y, y, x, x, y, x)
        + P(x, x, y, y, y, x) - P(x, y, y, y, x, x) + P(y, y, x, x, x, y) - P(y, x, x, x, y, y)
        - (P(x, y, x, y, y, x) - P(x, y, y, x, y, x) + P(y, x, y, x, x, y)
           - P(y, x, x, y, x, y)).scale(q * q + qi * qi)
    ).scale(three)

    def nest(u, v):
        inner = u * v - v * u
        inner = _bracket(u, inner, q, qi)
        inner = _bracket(u, inner, qi, q)
        inner = _bracket(v, inner, q, qi)
        return _bracket(v, inner, qi, q)

    nested = nest(x, y) + nest(y, x)
    return raw, expansion, nested


def nested_bracket_check(x, y, qv=Q) -> bool:
    if isinstance(x, MatN) and isinstance(y, MatN):
        x._check(y)
    raw, expansion, nested = nested_bracket_forms(x, y, qv)
    return raw == expansion and expansion == nested


def xi_commute_in_delta() -> bool:
    return commutator(xi1_delta(), xi2_delta()).is_zero()


def kernel_element_delta(z: DeltaElement) -> DeltaElement:
    """Image of ``xi1 z xi2 - xi2 z xi1`` after ``X -> A, Y -> B``."""
    s1, s2 = xi1_delta(), xi2_delta()
    return multiply(multiply(s1, z), s2) - multiply(multiply(s2, z), s1)
