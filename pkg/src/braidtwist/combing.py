"""
Combing: rewrite a braid whose strands 2..n can be pulled straight as a word
in the free generators a_1, ..., a_{n-1}.

The braid is read left to right while keeping the invariant

    prefix = s(beta) * G * c_p

where p is the current position of strand 1, ``c_p = sigma_1 ... sigma_{p-1}``,
``s`` shifts a braid on n-1 strands onto strands 2..n, and G is a free word.
Each letter either moves strand 1 (contributing a generator a_p^-1 or
a_{p-1} to G) or braids strands 2..n (conjugating G by a shifted
generator). At the end p = 1 and s(beta) is the strand-1 deletion of the
input, which is trivial for a combed braid, leaving the input equal to G.
"""

from __future__ import annotations

from .braid import BraidWord, delete_strand, permutation
from .free import FreeWord, reduce_letters
from .word_problem import BudgetExceeded, is_trivial

DEFAULT_BUDGET = 200_000


def _conjugation_table(m: int, e: int) -> dict[int, list[int]]:
    """Images of a_{m-1}, a_m under x -> sigma_m^-e x sigma_m^e (m >= 2).

    The other generators are fixed.
    """
    if e > 0:
        return {m - 1: [m], m: [m, m - 1, -m]}
    return {m - 1: [-(m - 1), m, m - 1], m: [m - 1]}


def conjugate_free(syllables: list[int], m: int, e: int) -> list[int]:
    """sigma_m^-e * G * sigma_m^e for G in the free subgroup, as a reduced word."""
    table = _conjugation_table(m, e)
    out: list[int] = []
    for g in syllables:
        img = table.get(abs(g))
        if img is None:
            out.append(g)
        elif g > 0:
            out.extend(img)
        else:
            out.extend(-h for h in reversed(img))
    return reduce_letters(out)


def in_A_n(w: BraidWord, max_length: int | None = None) -> bool:
    """True iff w is pure and deleting strand 1 leaves the trivial braid."""
    if not permutation(w).is_identity():
        return False
    return is_trivial(delete_strand(w, 1), max_length)


def comb(w: BraidWord, budget: int = DEFAULT_BUDGET) -> FreeWord:
    """Free word u with embed(u) = w, for w in the combed subgroup.

    The caller is responsible for checking ``in_A_n(w)`` first; on other
    inputs the result is meaningless. Raises BudgetExceeded when an
    intermediate free word grows past ``budget`` syllables.
    """
    n = w.strands
    g: list[int] = []
    p = 1
    for e in w.letters:
        i, sign = abs(e), (1 if e > 0 else -1)
        if i >= p + 1:
            g = conjugate_free(g, i, sign)
        elif i <= p - 2:
            g = conjugate_free(g, i + 1, sign)
        elif i == p:
            if sign < 0:
                g = reduce_letters(g + [-p])
            p += 1
        else:
            if sign > 0:
                g = reduce_letters(g + [p - 1])
            p -= 1
        if len(g) > budget:
            raise BudgetExceeded(f"combing exceeded {budget} free syllables")
    if p != 1:
        raise ValueError("strand 1 does not return to position 1; not a combed braid")
    return FreeWord(n - 1, tuple(g))
