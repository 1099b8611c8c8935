"""Words over the alphabet ``A < B < C < al < be < ga``.

A word is a plain tuple of :class:`Letter`.  The letter order is the one used
by the reduction system: a word is irreducible exactly when it is sorted.
"""
from __future__ import annotations

from collections import Counter
from enum import IntEnum
from typing import Iterable, Optional, Sequence, Tuple

__all__ = [
    "Letter",
    "Word",
    "LETTER_NAMES",
    "word",
    "render_word",
    "parse_word",
    "inversions",
    "is_irreducible",
    "first_inversion",
    "last_inversion",
    "order_less",
]


class Letter(IntEnum):
    A = 0
    B = 1
    C = 2
    Alpha = 3
    Beta = 4
    Gamma = 5

    @property
    def symbol(self) -> str:
        return LETTER_NAMES[self]

    @property
    def is_greek(self) -> bool:
        return self >= Letter.Alpha


Word = Tuple[Letter, ...]

LETTER_NAMES = {
    Letter.A: "A",
    Letter.B: "B",
    Letter.C: "C",
    Letter.Alpha: "al",
    Letter.Beta: "be",
    Letter.Gamma: "ga",
}
_BY_NAME = {v: k for k, v in LETTER_NAMES.items()}


def word(letters: Iterable[Letter | str | int] | str) -> Word:
    """Build a word from letters, letter names, or a juxtaposed string."""
    if isinstance(letters, str):
        return parse_word(letters)
    out = []
    for x in letters:
        if isinstance(x, Letter):
            out.append(x)
        elif isinstance(x, str):
            out.append(_BY_NAME[x])
        else:
            out.append(Letter(x))
    return tuple(out)


def render_word(w: Sequence[Letter]) -> str:
    return "".join(LETTER_NAMES[x] for x in w)


def parse_word(text: str) -> Word:
    """Parse juxtaposed symbols such as ``"CBA"`` or ``"ABga"``."""
    out = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in "ABC":
            out.append(_BY_NAME[ch])
            i += 1
        elif text[i:i + 2] in _BY_NAME:
            out.append(_BY_NAME[text[i:i + 2]])
            i += 2
        else:
            raise ValueError(f"unknown letter at offset {i} in {text!r}")
    return tuple(out)


def inversions(w: Sequence[Letter]) -> int:
    """Number of pairs ``i < j`` with ``w[i] > w[j]``."""
    seen = [0] * 6
    count = 0
    for x in reversed(w):
        count += sum(seen[:x])
        seen[x] += 1
    return count


def is_irreducible(w: Sequence[Letter]) -> bool:
    return all(w[i] <= w[i + 1] for i in range(len(w) - 1))


def first_inversion(w: Sequence[Letter]) -> Optional[int]:
    """Smallest 1-based ``j`` such that ``w[j-2] > w[j-1]``, or ``None``."""
    for i in range(len(w) - 1):
        if w[i] > w[i + 1]:
            return i + 2
    return None


def last_inversion(w: Sequence[Letter]) -> Optional[int]:
    """Largest 1-based ``j`` such that ``w[j-2] > w[j-1]``, or ``None``."""
    for i in range(len(w) - 2, -1, -1):
        if w[i] > w[i + 1]:
            return i + 2
    return None


def order_less(w1: Sequence[Letter], w2: Sequence[Letter]) -> bool:
    """Computable proxy for the reduction order.

    Shorter words are smaller; words of equal length are comparable only when
    they are rearrangements of each other, and then the one with fewer
    inversions is smaller.
    """
    if len(w1) != len(w2):
        return len(w1) < len(w2)
    if Counter(w1) != Counter(w2):
        return False
    return inversions(w1) < inversions(w2)
