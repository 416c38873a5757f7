"""
Recognising powers of half-twists.

A half-twist is a conjugate ``P^-1 sigma_1 P``. Given a braid b, ``classify``
decides whether b is a power of a half-twist and, if so, returns the
exponent k, the root r (a half-twist with r^k = b) and a conjugator P with
``b = P^-1 sigma_1^k P``.

Outline for k = exp(b) > 0:

1. The permutation must be a transposition (k odd) or the identity (k even),
   and for even k the crossing indices must be k/2 on exactly one pair of
   strands (the switching strands) and zero elsewhere.
2. Conjugate so the switching strands sit at positions 1 and n.
3. Square the braid if k is odd, then comb it into the free subgroup
   A_n = <a_1, ..., a_{n-1}>; a half-twist power is combed and conjugate in
   A_n to a power of a_{n-1}.
4. Read off the conjugator in A_n, embed it back, and build the root from
   the half-twist delta(n) whose square is a_{n-1}. For odd k the root of
   the square is checked against b directly.

Negative exponents are handled by inverting b; exponent zero means b is
either trivial or not a power at all.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from functools import lru_cache

from .braid import (
    BraidWord,
    concat,
    conjugate,
    crossing_matrix,
    exponent_sum,
    free_cancel,
    invert,
    permutation,
    power,
    sigma,
)
from .combing import DEFAULT_BUDGET, comb, in_A_n
from .free import conjugate_to_generator_power, embed
from .word_problem import BudgetExceeded, equal, find_positive_conjugator, is_trivial


class FailedStep(str, enum.Enum):
    ZERO_EXPONENT = "zero-exponent"
    PERMUTATION = "permutation-filter"
    CROSSING = "crossing-filter"
    COMBING = "combing-filter"
    FREE_CONJUGACY = "free-conjugacy"
    ROOT_CHECK = "root-check"


@dataclass(frozen=True)
class NotPower:
    reason: FailedStep


@dataclass(frozen=True)
class Identity:
    pass


@dataclass(frozen=True)
class Power:
    k: int
    root: BraidWord
    conjugator: BraidWord


@dataclass(frozen=True)
class Undecided:
    detail: str


Classification = NotPower | Identity | Power | Undecided


@dataclass(frozen=True)
class SwitchingPair:
    i: int
    j: int

    def __post_init__(self) -> None:
        if not 1 <= self.i < self.j:
            raise ValueError(f"invalid switching pair ({self.i}, {self.j})")


def delta(n: int) -> BraidWord:
    """The half-twist exchanging positions 1 and n, whose square is a_{n-1}."""
    up = list(range(1, n - 1))
    return BraidWord(n, tuple(up + [n - 1] + [-i for i in reversed(up)]))


@lru_cache(maxsize=None)
def delta_conjugator(n: int) -> BraidWord:
    """D with D^-1 sigma_1 D = delta(n), checked against the word problem."""
    d = BraidWord(n, tuple(range(2, n)))
    if equal(conjugate(sigma(n, 1), d), delta(n)):
        return d
    found = find_positive_conjugator(sigma(n, 1), delta(n), 2 * n)
    if found is None:
        raise RuntimeError(f"no conjugator from sigma_1 to delta({n}) found")
    return found


def generator_mover(n: int, i: int) -> BraidWord:
    """M with M^-1 sigma_1 M = sigma_i."""
    letters: list[int] = []
    for g in range(1, i):
        letters += [-(g + 1), -g]
    return BraidWord(n, tuple(letters))


def switching_pair(b: BraidWord, k: int) -> SwitchingPair | FailedStep:
    """The strands a power-k half-twist would entangle, or the failed filter."""
    perm = permutation(b)
    if k % 2:
        pair = perm.transposition()
        if pair is None:
            return FailedStep.PERMUTATION
        return SwitchingPair(*pair)
    if not perm.is_identity():
        return FailedStep.PERMUTATION
    return _crossing_pair(b, k // 2)


def _crossing_pair(b: BraidWord, half: int) -> SwitchingPair | FailedStep:
    nz = crossing_matrix(b).nonzero()
    pairs = {tuple(sorted(ij)) for ij in nz}
    if len(pairs) != 1:
        return FailedStep.CROSSING
    i, j = pairs.pop()
    if nz.get((i, j)) != half or nz.get((j, i)) != half:
        return FailedStep.CROSSING
    return SwitchingPair(i, j)


def move_switching_strands(b: BraidWord, pair: SwitchingPair) -> tuple[BraidWord, BraidWord]:
    """(b', C) with b' = C^-1 b C and switching strands moved to (1, n).

    C = sigma_{i-1} ... sigma_1 * sigma_j ... sigma_{n-1} carries position i
    to 1 and then position j to n.
    """
    n = b.strands
    i, j = pair.i, pair.j
    c = BraidWord(n, tuple(range(i - 1, 0, -1)) + tuple(range(j, n)))
    moved = conjugate(b, c)
    perm = permutation(moved)
    k = exponent_sum(b)
    if k % 2:
        ok = perm.transposition() == (1, n)
    else:
        ok = perm.is_identity() and _crossing_pair(moved, k // 2) == SwitchingPair(1, n)
    if not ok:
        raise AssertionError(f"switching strands of {moved} are not (1, {n})")
    return moved, c


def classify(b: BraidWord, budget: int = DEFAULT_BUDGET) -> Classification:
    try:
        return _classify(b, budget)
    except BudgetExceeded as exc:
        return Undecided(str(exc))


def _classify(b: BraidWord, budget: int) -> Classification:
    n = b.strands
    k = exponent_sum(b)
    if k == 0:
        return Identity() if is_trivial(b) else NotPower(FailedStep.ZERO_EXPONENT)
    if k < 0:
        res = _classify(invert(b), budget)
        if isinstance(res, Power):
            # b^-1 = r^|k| with r a half-twist, so b = r^k for negative k
            return Power(k, res.root, res.conjugator)
        return res

    pair = switching_pair(b, k)
    if isinstance(pair, FailedStep):
        return NotPower(pair)
    moved, c = move_switching_strands(b, pair)

    if k % 2:
        candidate = concat(moved, moved)
        if _crossing_pair(candidate, k) != SwitchingPair(1, n):
            return NotPower(FailedStep.CROSSING)
        target = k
    else:
        candidate = moved
        target = k // 2

    if not in_A_n(candidate):
        return NotPower(FailedStep.COMBING)
    combed = comb(candidate, budget)

    q = conjugate_to_generator_power(combed, n - 1, target)
    if q is None:
        return NotPower(FailedStep.FREE_CONJUGACY)
    qb = embed(q, n)
    root = conjugate(delta(n), qb)
    if k % 2 and not equal(power(root, k), moved):
        return NotPower(FailedStep.ROOT_CHECK)

    # undo the repositioning: b = C b' C^-1, and delta(n) = D^-1 sigma_1 D
    p = free_cancel(concat(delta_conjugator(n), qb, invert(c)))
    return Power(k, conjugate(sigma(n, 1), p), p)


def random_word(n: int, length: int, rng: random.Random) -> BraidWord:
    """Random freely reduced word."""
    letters: list[int] = []
    while len(letters) < length:
        e = rng.choice([1, -1]) * rng.randint(1, n - 1)
        if letters and letters[-1] == -e:
            continue
        letters.append(e)
    return BraidWord(n, tuple(letters))


def random_half_twist_power(
    n: int, k: int, conj_len: int, seed: int, i: int | None = None
) -> tuple[BraidWord, tuple[BraidWord, BraidWord]]:
    """A seeded instance q^-1 sigma_i^k q with its root and conjugator."""
    if n < 2 or k == 0 or conj_len < 0:
        raise ValueError("need n >= 2, k != 0, conj_len >= 0")
    rng = random.Random(seed)
    q = random_word(n, conj_len, rng)
    if i is None:
        i = rng.randint(1, n - 1)
    b = conjugate(sigma(n, i, k), q)
    root = conjugate(sigma(n, i), q)
    p = free_cancel(concat(generator_mover(n, i), q))
    return b, (root, p)


def check_certificate(b: BraidWord, k: int, root: BraidWord, conjugator: BraidWord) -> bool:
    """Verify r^k = b, P^-1 sigma_1^k P = b and r = P^-1 sigma_1 P."""
    n = b.strands
    return (
        equal(power(root, k), b)
        and equal(conjugate(sigma(n, 1, k), conjugator), b)
        and equal(conjugate(sigma(n, 1), conjugator), root)
    )

