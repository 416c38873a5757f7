import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from braidtwist.braid import BraidWord, concat, conjugate, make_word, sigma
from braidtwist.combing import comb, conjugate_free, in_A_n
from braidtwist.free import FreeWord, embed, generator, reduce
from braidtwist.word_problem import BudgetExceeded, equal
from conftest import free_words
from oracles import artin_equal, random_word

COMBED_SAMPLE = make_word(4, [1, -2, -3, -3, 2, 2, 3, 3, -2, 1])


def test_in_A_n_examples():
    assert in_A_n(make_word(3, [1, 2, 2, -1]))
    assert in_A_n(make_word(3, [1, 1]))
    assert not in_A_n(make_word(3, [2, 2]))
    assert not in_A_n(make_word(3, [1]))
    assert in_A_n(COMBED_SAMPLE)


def test_comb_examples():
    assert comb(make_word(2, [1, 1])) == FreeWord(1, (1,))
    assert comb(COMBED_SAMPLE) == FreeWord(3, (-2, -3, 2, 3, 1))
    assert equal(embed(comb(COMBED_SAMPLE), 4), COMBED_SAMPLE)
    assert comb(make_word(4, [])) == FreeWord(3, ())


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_conjugation_table_against_oracle(n):
    # sigma_m^-e a_i sigma_m^e, for every shifted generator and every a_i
    for m, e, i in itertools.product(range(2, n), (1, -1), range(1, n)):
        image = FreeWord(n - 1, tuple(conjugate_free([i], m, e)))
        expected = conjugate(embed(generator(n - 1, i), n), sigma(n, m, e))
        assert artin_equal(embed(image, n), expected), (m, e, i)


@given(free_words(max_len=6))
@settings(max_examples=200)
def test_round_trip_free_to_braid_to_free(u):
    assert comb(embed(u, u.rank + 1)) == u


def _scrambled_combed_braid(n, rng):
    """A combed braid written nothing like a product of a_i's."""
    u = reduce(n - 1, [rng.choice([1, -1]) * rng.randint(1, n - 1) for _ in range(rng.randint(0, 5))])
    s = random_word(n - 1, rng.randint(0, 6), rng) if n > 2 else BraidWord(1, ())
    shifted = BraidWord(n, tuple(e + 1 if e > 0 else e - 1 for e in s.letters))
    # conjugating by a braid on strands 2..n keeps the combed subgroup
    return conjugate(embed(u, n), shifted)


def test_round_trip_braid_to_free_to_braid():
    rng = random.Random(11)
    for _ in range(150):
        n = rng.randint(2, 6)
        b = _scrambled_combed_braid(n, rng)
        assert in_A_n(b)
        assert equal(embed(comb(b), n), b)


def test_comb_is_multiplicative():
    rng = random.Random(5)
    for _ in range(60):
        n = rng.randint(3, 5)
        b1 = _scrambled_combed_braid(n, rng)
        b2 = _scrambled_combed_braid(n, rng)
        assert comb(concat(b1, b2)) == comb(b1) * comb(b2)


def test_non_combed_braids_rejected():
    rng = random.Random(2)
    rejected = 0
    for _ in range(100):
        n = rng.randint(3, 5)
        s = random_word(n - 1, rng.randint(1, 6), rng)
        shifted = BraidWord(n, tuple(e + 1 if e > 0 else e - 1 for e in s.letters))
        pure = concat(shifted, shifted)
        if not equal(s, BraidWord(n - 1, ())) and not equal(concat(s, s), BraidWord(n - 1, ())):
            assert not in_A_n(pure)
            rejected += 1
    assert rejected > 50


def test_comb_budget():
    b = embed(FreeWord(3, (1, 2, 3) * 10), 4)
    with pytest.raises(BudgetExceeded):
        comb(b, budget=5)
