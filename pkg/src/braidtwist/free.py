"""
The free subgroup of combed braids, generated by a_1, ..., a_{n-1} with

    a_i = sigma_1 ... sigma_{i-1} sigma_i^2 sigma_{i-1}^-1 ... sigma_1^-1.

Free words are stored like braid words: the signed integer ``g`` stands for
a_|g|^sign(g). Conjugation follows the braid convention ``q^-1 x q``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

from .braid import BraidError, BraidWord, free_cancel


@dataclass(frozen=True)
class FreeWord:
    rank: int
    syllables: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        syl = tuple(int(g) for g in self.syllables)
        for pos, g in enumerate(syl):
            if not 1 <= abs(g) <= self.rank:
                raise BraidError(f"a{abs(g)} at position {pos} exceeds rank {self.rank}")
        for a, b in zip(syl, syl[1:]):
            if a == -b:
                raise BraidError(f"free word is not reduced: {syl}")
        object.__setattr__(self, "syllables", syl)

    def __len__(self) -> int:
        return len(self.syllables)

    def __mul__(self, other: FreeWord) -> FreeWord:
        if self.rank != other.rank:
            raise BraidError(f"ranks differ: {self.rank} != {other.rank}")
        return reduce(self.rank, self.syllables + other.syllables)

    def __invert__(self) -> FreeWord:
        return FreeWord(self.rank, tuple(-g for g in reversed(self.syllables)))

    def __pow__(self, k: int) -> FreeWord:
        base = self if k >= 0 else ~self
        return reduce(self.rank, base.syllables * abs(k))

    def __str__(self) -> str:
        return format_free(self)


def reduce_letters(letters: Iterable[int]) -> list[int]:
    stack: list[int] = []
    for g in letters:
        if stack and stack[-1] == -g:
            stack.pop()
        else:
            stack.append(g)
    return stack


def reduce(rank: int, syllables: Iterable[int]) -> FreeWord:
    return FreeWord(rank, tuple(reduce_letters(syllables)))


def generator(rank: int, g: int, k: int = 1) -> FreeWord:
    """a_g^k."""
    return FreeWord(rank, ((g if k > 0 else -g),) * abs(k))


def cyclic_reduce(w: FreeWord) -> tuple[FreeWord, FreeWord]:
    """Split w = u * core * u^-1 with core cyclically reduced."""
    syl = w.syllables
    lo, hi = 0, len(syl)
    while hi - lo >= 2 and syl[lo] == -syl[hi - 1]:
        lo += 1
        hi -= 1
    return FreeWord(w.rank, syl[lo:hi]), FreeWord(w.rank, syl[:lo])


def conjugate_to_generator_power(w: FreeWord, g: int, k: int) -> FreeWord | None:
    """Q with Q^-1 a_g^k Q = w, or None if w is not conjugate to a_g^k.

    Conjugate cyclically reduced words are cyclic rotations of each other,
    and a_g^k is its own only rotation, so comparing cores is enough.
    """
    if k == 0:
        raise ValueError("k must be nonzero")
    core, u = cyclic_reduce(w)
    if core != generator(w.rank, g, k):
        return None
    return ~u


def generator_braid(n: int, g: int) -> list[int]:
    """Braid letters of a_g in B_n."""
    return list(range(1, g)) + [g, g] + [-i for i in range(g - 1, 0, -1)]


def embed(w: FreeWord, n: int) -> BraidWord:
    if w.rank != n - 1:
        raise BraidError(f"rank {w.rank} free word does not embed in B_{n}")
    letters: list[int] = []
    for g in w.syllables:
        a = generator_braid(n, abs(g))
        letters.extend(a if g > 0 else [-e for e in reversed(a)])
    return free_cancel(BraidWord(n, tuple(letters)))


_SYLLABLE = re.compile(r"a(\d+)(?:\^(-?\d+))?$")


def format_free(w: FreeWord) -> str:
    if not w.syllables:
        return "1"
    out = []
    for g in w.syllables:
        out.append(f"a{g}" if g > 0 else f"a{-g}^-1")
    return " ".join(out)


def parse_free(text: str, rank: int) -> FreeWord:
    """Parse tokens like ``a2^-1 a3 a1`` (any integer exponent); "1" is empty."""
    syl: list[int] = []
    for pos, tok in enumerate(text.split()):
        if tok == "1":
            continue
        m = _SYLLABLE.match(tok)
        if not m:
            raise BraidError(f"bad free-group token {tok!r} at position {pos}")
        g, k = int(m.group(1)), int(m.group(2) or 1)
        syl.extend([g if k > 0 else -g] * abs(k))
    return reduce(rank, syl)
