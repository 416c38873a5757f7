"""
Equality of braid words.

The decision procedure is the Garside left normal form: every braid is
uniquely ``Delta^inf * A_1 ... A_k`` with each ``A_i`` a simple braid (a
positive braid in which any two strands cross at most once), no ``A_i`` equal
to Delta or to the identity, and each pair ``(A_i, A_{i+1})`` left-weighted.

Simple braids are stored as arrangements: a tuple whose entry ``p`` is the
(0-based) strand label sitting at position ``p`` after the braid. Positions
and generator indices inside this module are 0-based.

The positive-equivalence search and left extraction at the bottom of the
module are independent checks used by the test suite.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from .braid import BraidError, BraidWord, concat, conjugate, exponent_sum, invert

Simple = tuple[int, ...]


class BudgetExceeded(RuntimeError):
    """A resource limit was hit before the computation could decide."""


def _identity(n: int) -> Simple:
    return tuple(range(n))


def _delta(n: int) -> Simple:
    return tuple(range(n - 1, -1, -1))


def _right_mul(a: Simple, i: int) -> Simple:
    arr = list(a)
    arr[i], arr[i + 1] = arr[i + 1], arr[i]
    return tuple(arr)


def _left_div(a: Simple, i: int) -> Simple:
    """sigma_i^-1 * a, assuming sigma_i left-divides a."""
    return tuple(i + 1 if s == i else i if s == i + 1 else s for s in a)


def _finishing(a: Simple) -> set[int]:
    return {i for i in range(len(a) - 1) if a[i] > a[i + 1]}


def _starting(a: Simple) -> set[int]:
    pos = [0] * len(a)
    for p, s in enumerate(a):
        pos[s] = p
    return {i for i in range(len(a) - 1) if pos[i + 1] < pos[i]}


def _tau(a: Simple) -> Simple:
    n = len(a)
    return tuple(n - 1 - a[n - 1 - p] for p in range(n))


def _left_complement(n: int, i: int) -> Simple:
    """X with Delta = sigma_i * X."""
    return _left_div(_delta(n), i)


def _normalize_pair(a: Simple, b: Simple) -> tuple[Simple, Simple]:
    while True:
        moves = _starting(b) - _finishing(a)
        if not moves:
            return a, b
        i = min(moves)
        a = _right_mul(a, i)
        b = _left_div(b, i)


def simple_word(a: Simple) -> list[int]:
    """A positive word (1-based letters) for a simple braid."""
    arr = list(a)
    swaps = []
    changed = True
    while changed:
        changed = False
        for i in range(len(arr) - 1):
            if arr[i] > arr[i + 1]:
                arr[i], arr[i + 1] = arr[i + 1], arr[i]
                swaps.append(i + 1)
                changed = True
    return swaps[::-1]


@dataclass(frozen=True)
class NormalForm:
    strands: int
    inf: int
    factors: tuple[Simple, ...]

    def is_identity(self) -> bool:
        return self.inf == 0 and not self.factors

    def to_word(self) -> BraidWord:
        n = self.strands
        delta = simple_word(_delta(n))
        letters: list[int] = []
        if self.inf >= 0:
            letters.extend(delta * self.inf)
        else:
            letters.extend([-e for e in reversed(delta)] * -self.inf)
        for f in self.factors:
            letters.extend(simple_word(f))
        return BraidWord(n, tuple(letters))

    def __str__(self) -> str:
        body = " . ".join("[" + " ".join(map(str, simple_word(f))) + "]" for f in self.factors)
        return f"Delta^{self.inf}" + (" . " + body if body else "")


class _Builder:
    """Incremental left normal form of a growing word."""

    def __init__(self, n: int):
        self.n = n
        self.delta = _delta(n)
        self.ident = _identity(n)
        self.shift = 0
        self.factors: list[Simple] = []

    def _push(self, x: Simple) -> None:
        fs = self.factors
        fs.append(x)
        k = len(fs) - 2
        while k >= 0:
            a, b = _normalize_pair(fs[k], fs[k + 1])
            if a == fs[k]:
                break
            fs[k], fs[k + 1] = a, b
            k -= 1
        while fs and fs[-1] == self.ident:
            fs.pop()

    def letter(self, e: int) -> None:
        i = abs(e) - 1
        if e > 0:
            self._push(_right_mul(self.ident, i))
        else:
            # sigma_i^-1 = X_i Delta^-1, and x Delta^-1 = Delta^-1 tau(x)
            self.factors = [_tau(f) for f in self.factors]
            self.shift += 1
            self._push(_tau(_left_complement(self.n, i)))

    def result(self) -> NormalForm:
        fs = self.factors
        lead = 0
        while lead < len(fs) and fs[lead] == self.delta:
            lead += 1
        tail = [f for f in fs[lead:] if f != self.ident]
        return NormalForm(self.n, lead - self.shift, tuple(tail))


def normal_form(w: BraidWord, max_length: int | None = None) -> NormalForm:
    """Left normal form of w. Raises BudgetExceeded if |w| > max_length."""
    if max_length is not None and len(w) > max_length:
        raise BudgetExceeded(f"word length {len(w)} exceeds budget {max_length}")
    b = _Builder(w.strands)
    for e in w.letters:
        b.letter(e)
    return b.result()


def is_left_weighted(nf: NormalForm) -> bool:
    return all(
        _starting(b) <= _finishing(a) for a, b in zip(nf.factors, nf.factors[1:])
    )


def is_trivial(w: BraidWord, max_length: int | None = None) -> bool:
    if w.strands <= 2:
        return exponent_sum(w) == 0
    return normal_form(w, max_length).is_identity()


def equal(u: BraidWord, v: BraidWord, max_length: int | None = None) -> bool:
    if u.strands != v.strands:
        raise BraidError(f"strand counts differ: {u.strands} != {v.strands}")
    return is_trivial(concat(u, invert(v)), max_length)


# -- positive braids --------------------------------------------------------


def _relation_moves(word: tuple[int, ...]):
    for k in range(len(word) - 1):
        a, b = word[k], word[k + 1]
        if abs(a - b) >= 2:
            yield word[:k] + (b, a) + word[k + 2 :]
        elif abs(a - b) == 1 and k + 2 < len(word) and word[k + 2] == a:
            yield word[:k] + (b, a, b) + word[k + 3 :]


@lru_cache(maxsize=65536)
def positive_orbit(word: tuple[int, ...]) -> frozenset[tuple[int, ...]]:
    """All positive words reachable from word by single relation moves."""
    seen = {word}
    queue = deque([word])
    while queue:
        cur = queue.popleft()
        for nxt in _relation_moves(cur):
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return frozenset(seen)


def positive_equal(u: BraidWord, v: BraidWord) -> bool:
    """Positive equivalence by breadth-first search over relation moves."""
    if u.strands != v.strands:
        raise BraidError(f"strand counts differ: {u.strands} != {v.strands}")
    if not all(e > 0 for e in u.letters + v.letters):
        raise BraidError("positive_equal needs positive words")
    if len(u) != len(v):
        return False
    return v.letters in positive_orbit(u.letters)


def left_extract(alpha: BraidWord, i: int) -> BraidWord | None:
    """Write alpha = sigma_i * w with w positive; return w, or None.

    Uses left divisibility in the normal form: sigma_i left-divides a positive
    braid iff the braid starts with Delta or i is in the starting set of its
    first factor.
    """
    if any(e < 0 for e in alpha.letters):
        raise BraidError("left_extract needs a positive word")
    n = alpha.strands
    nf = normal_form(alpha)
    g = i - 1
    if nf.inf > 0:
        head = simple_word(_left_complement(n, g))
        rest = NormalForm(n, nf.inf - 1, nf.factors).to_word()
        return BraidWord(n, tuple(head) + rest.letters)
    if nf.factors and g in _starting(nf.factors[0]):
        first = simple_word(_left_div(nf.factors[0], g))
        rest = [e for f in nf.factors[1:] for e in simple_word(f)]
        return BraidWord(n, tuple(first + rest))
    return None


def positive_words(n: int, length: int):
    for letters in itertools.product(range(1, n), repeat=length):
        yield BraidWord(n, letters)


def find_positive_conjugator(
    alpha: BraidWord, beta: BraidWord, max_len: int
) -> BraidWord | None:
    """First positive w with |w| <= max_len and w^-1 alpha w = beta, if any.

    None only means nothing was found within the length bound.
    """
    if alpha.strands != beta.strands:
        raise BraidError(f"strand counts differ: {alpha.strands} != {beta.strands}")
    if exponent_sum(alpha) != exponent_sum(beta):
        return None
    for length in range(max_len + 1):
        for w in positive_words(alpha.strands, length):
            if equal(conjugate(alpha, w), beta):
                return w
    return None
