"""
Braid words and their combinatorial invariants.

A braid word on ``n`` strands is a sequence of signed integers: the entry ``e``
stands for the generator sigma_|e| raised to sign(e). Strands are labelled by
their starting position (1-based); letters act left to right on positions, so
the k-th letter acts after the first k-1 letters.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence


class BraidError(ValueError):
    """Raised for malformed words or mismatched strand counts."""


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.strands < 1:
            raise BraidError(f"strand count must be positive, got {self.strands}")
        letters = tuple(int(e) for e in self.letters)
        for pos, e in enumerate(letters):
            if not 1 <= abs(e) <= self.strands - 1:
                raise BraidError(
                    f"letter {e} at position {pos} is not a generator of B_{self.strands}"
                )
        object.__setattr__(self, "letters", letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        return concat(self, other)

    def __invert__(self) -> BraidWord:
        return invert(self)

    def __str__(self) -> str:
        return format_word(self)


def make_word(n: int, letters: Iterable[int] = ()) -> BraidWord:
    if n < 2:
        raise BraidError(f"need at least 2 strands, got {n}")
    return BraidWord(n, tuple(letters))


def identity(n: int) -> BraidWord:
    return BraidWord(n, ())


def _check_same(u: BraidWord, v: BraidWord) -> None:
    if u.strands != v.strands:
        raise BraidError(f"strand counts differ: {u.strands} != {v.strands}")


def concat(*words: BraidWord) -> BraidWord:
    if not words:
        raise BraidError("concat needs at least one word")
    first = words[0]
    out: list[int] = []
    for w in words:
        _check_same(first, w)
        out.extend(w.letters)
    return BraidWord(first.strands, tuple(out))


def invert(w: BraidWord) -> BraidWord:
    return BraidWord(w.strands, tuple(-e for e in reversed(w.letters)))


def free_cancel(w: BraidWord) -> BraidWord:
    """Remove adjacent inverse pairs until none remain (no braid relations)."""
    stack: list[int] = []
    for e in w.letters:
        if stack and stack[-1] == -e:
            stack.pop()
        else:
            stack.append(e)
    return BraidWord(w.strands, tuple(stack))


def conjugate(w: BraidWord, q: BraidWord) -> BraidWord:
    """Return q^-1 w q, freely cancelled."""
    return free_cancel(concat(invert(q), w, q))


def power(w: BraidWord, k: int) -> BraidWord:
    if k < 0:
        w, k = invert(w), -k
    return free_cancel(BraidWord(w.strands, w.letters * k))


def is_positive(w: BraidWord) -> bool:
    return all(e > 0 for e in w.letters)


def exponent_sum(w: BraidWord) -> int:
    return sum(1 if e > 0 else -1 for e in w.letters)


@dataclass(frozen=True)
class Permutation:
    """The permutation a braid induces on its strands.

    ``images[s - 1]`` is the final position of the strand starting at
    position ``s``. Since letters act left to right, the permutation of
    ``u * v`` is that of ``v`` composed after that of ``u``.
    """

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise BraidError(f"not a bijection: {self.images}")

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, s: int) -> int:
        return self.images[s - 1]

    def is_identity(self) -> bool:
        return all(img == s for s, img in enumerate(self.images, 1))

    def moved(self) -> list[int]:
        return [s for s, img in enumerate(self.images, 1) if img != s]

    def transposition(self) -> tuple[int, int] | None:
        """The pair (i, j), i < j, if this is a transposition; else None."""
        moved = self.moved()
        if len(moved) == 2:
            i, j = moved
            return i, j
        return None

    def cycles(self) -> list[tuple[int, ...]]:
        seen: set[int] = set()
        out = []
        for s in range(1, self.n + 1):
            if s in seen or self(s) == s:
                continue
            cyc = [s]
            seen.add(s)
            t = self(s)
            while t != s:
                cyc.append(t)
                seen.add(t)
                t = self(t)
            out.append(tuple(cyc))
        return out

    def __str__(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)


def arrangement(w: BraidWord) -> list[int]:
    """Strand labels by final position: ``arr[p - 1]`` is the strand at p."""
    arr = list(range(1, w.strands + 1))
    for e in w.letters:
        i = abs(e)
        arr[i - 1], arr[i] = arr[i], arr[i - 1]
    return arr


def permutation(w: BraidWord) -> Permutation:
    arr = arrangement(w)
    images = [0] * w.strands
    for pos, strand in enumerate(arr, 1):
        images[strand - 1] = pos
    return Permutation(tuple(images))


@dataclass(frozen=True)
class CrossingMatrix:
    n: int
    entries: tuple[tuple[int, ...], ...]

    def __call__(self, i: int, j: int) -> int:
        return self.entries[i - 1][j - 1]

    def off_diagonal_sum(self) -> int:
        return sum(
            self.entries[i][j] for i in range(self.n) for j in range(self.n) if i != j
        )

    def is_symmetric(self) -> bool:
        return all(
            self.entries[i][j] == self.entries[j][i]
            for i in range(self.n)
            for j in range(i)
        )

    def nonzero(self) -> dict[tuple[int, int], int]:
        return {
            (i + 1, j + 1): v
            for i, row in enumerate(self.entries)
            for j, v in enumerate(row)
            if v
        }

    def __str__(self) -> str:
        return "\n".join(" ".join(f"{v:3d}" for v in row) for row in self.entries)


def crossing_matrix(w: BraidWord) -> CrossingMatrix:
    """Crossing indices cr(i, j) = p(i, j) - n(i, j) over strand labels.

    At a letter on positions (i, i+1) with strand s at i and t at i+1, a
    positive letter counts toward p(s, t) and a negative one toward n(t, s).
    This makes cr vanish on cancelling pairs and sum to the exponent sum.
    """
    n = w.strands
    p = [[0] * n for _ in range(n)]
    neg = [[0] * n for _ in range(n)]
    arr = list(range(n))
    for e in w.letters:
        i = abs(e) - 1
        s, t = arr[i], arr[i + 1]
        if e > 0:
            p[s][t] += 1
        else:
            neg[t][s] += 1
        arr[i], arr[i + 1] = t, s
    entries = tuple(tuple(p[a][b] - neg[a][b] for b in range(n)) for a in range(n))
    return CrossingMatrix(n, entries)


def track_strand(w: BraidWord, s: int) -> int:
    """Final position of the strand starting at position s."""
    for e in w.letters:
        i = abs(e)
        if s == i:
            s = i + 1
        elif s == i + 1:
            s = i
    return s


def delete_strand(w: BraidWord, s: int) -> BraidWord:
    """Drop the strand starting at position s, giving a word on n-1 strands.

    For n = 2 the result is the (necessarily empty) word on a single strand.
    """
    if not 1 <= s <= w.strands:
        raise BraidError(f"no strand {s} in B_{w.strands}")
    out: list[int] = []
    for e in w.letters:
        i = abs(e)
        if s == i:
            s = i + 1
        elif s == i + 1:
            s = i
        elif s < i:
            out.append(e - 1 if e > 0 else e + 1)
        else:
            out.append(e)
    return BraidWord(w.strands - 1, tuple(out))


_TOKEN = re.compile(r"[\s,]+")


def parse_letters(text: str) -> list[int]:
    letters = []
    for pos, tok in enumerate(t for t in _TOKEN.split(text.strip()) if t):
        try:
            letters.append(int(tok))
        except ValueError:
            raise BraidError(f"token {tok!r} at position {pos} is not an integer") from None
    return letters


def parse_word(text: str, n: int) -> BraidWord:
    """Parse whitespace- or comma-separated signed generator indices."""
    letters = parse_letters(text)
    for pos, e in enumerate(letters):
        if not 1 <= abs(e) <= n - 1:
            raise BraidError(f"letter {e} at position {pos} is not a generator of B_{n}")
    return make_word(n, letters)


def format_word(w: BraidWord) -> str:
    return " ".join(map(str, w.letters))


def sigma(n: int, i: int, e: int = 1) -> BraidWord:
    """The word sigma_i^e (e may be any integer)."""
    letter = i if e > 0 else -i
    return BraidWord(n, (letter,) * abs(e))
