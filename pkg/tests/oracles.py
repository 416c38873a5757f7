"""Independent reference computations for the test suite.

Nothing here imports the word-problem or combing code: braid equality is
decided with Artin's faithful action of B_n on the free group F_n, and
permutations are composed from explicit transposition functions.
"""

from __future__ import annotations

import random

from braidtwist.braid import BraidWord


def _reduce(word):
    out = []
    for g in word:
        if out and out[-1] == -g:
            out.pop()
        else:
            out.append(g)
    return out


def _inv(word):
    return [-g for g in reversed(word)]


def artin_action(w: BraidWord) -> tuple[tuple[int, ...], ...]:
    """Images of x_1..x_n under the automorphism of F_n attached to w.

    sigma_i: x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i.
    """
    imgs = [[j] for j in range(1, w.strands + 1)]
    for e in w.letters:
        i = abs(e) - 1
        a, b = imgs[i], imgs[i + 1]
        if e > 0:
            imgs[i], imgs[i + 1] = _reduce(a + b + _inv(a)), a
        else:
            imgs[i], imgs[i + 1] = b, _reduce(_inv(b) + a + b)
    return tuple(tuple(x) for x in imgs)


def artin_equal(u: BraidWord, v: BraidWord) -> bool:
    assert u.strands == v.strands
    return artin_action(u) == artin_action(v)


def permutation_by_transpositions(w: BraidWord) -> dict[int, int]:
    """Final position of each strand, composing (i i+1) as functions."""
    n = w.strands
    f = {s: s for s in range(1, n + 1)}
    for e in w.letters:
        i = abs(e)

        def t(x, i=i):
            return i + 1 if x == i else i if x == i + 1 else x

        f = {s: t(f[s]) for s in f}
    return f


def relation_move(letters: list[int], n: int, rng: random.Random) -> list[int]:
    """Apply one random defining relation (or cancelling pair) somewhere.

    Returns the same word if the chosen move is not applicable.
    """
    L = len(letters)
    kind = rng.randrange(5)
    if kind == 0:  # insert a cancelling pair
        pos = rng.randint(0, L)
        g = rng.randint(1, n - 1) * rng.choice([1, -1])
        return letters[:pos] + [g, -g] + letters[pos:]
    if kind == 1:  # remove a cancelling pair
        spots = [k for k in range(L - 1) if letters[k] == -letters[k + 1]]
        if not spots:
            return letters
        k = rng.choice(spots)
        return letters[:k] + letters[k + 2 :]
    if kind == 2:  # far commutation
        spots = [k for k in range(L - 1) if abs(abs(letters[k]) - abs(letters[k + 1])) >= 2]
        if not spots:
            return letters
        k = rng.choice(spots)
        return letters[:k] + [letters[k + 1], letters[k]] + letters[k + 2 :]
    # braid relation, positive or inverted: aba -> bab with |a-b| = 1, same signs
    spots = [
        k
        for k in range(L - 2)
        if letters[k] == letters[k + 2]
        and abs(abs(letters[k]) - abs(letters[k + 1])) == 1
        and (letters[k] > 0) == (letters[k + 1] > 0)
    ]
    if not spots:
        # manufacture one: insert sigma_i sigma_{i+1} sigma_i (sigma_{i+1} sigma_i sigma_{i+1})^-1
        if n < 3:
            return letters
        i = rng.randint(1, n - 2)
        pos = rng.randint(0, L)
        rel = [i, i + 1, i, -(i + 1), -i, -(i + 1)]
        return letters[:pos] + rel + letters[pos:]
    k = rng.choice(spots)
    a, b = letters[k], letters[k + 1]
    return letters[:k] + [b, a, b] + letters[k + 3 :]


def random_relation_walk(w: BraidWord, steps: int, rng: random.Random) -> BraidWord:
    letters = list(w.letters)
    for _ in range(steps):
        letters = relation_move(letters, w.strands, rng)
    return BraidWord(w.strands, tuple(letters))


def random_word(n: int, length: int, rng: random.Random) -> BraidWord:
    return BraidWord(n, tuple(rng.choice([1, -1]) * rng.randint(1, n - 1) for _ in range(length)))
