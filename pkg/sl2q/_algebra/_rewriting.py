"""
PBW normal ordering by word rewriting.

Each rule rewrites one adjacent pair that is out of the order Xm < X0 < C < Xp:

    X0 Xm -> q^2 Xm X0 - q Xm C
    C  Xm -> Xm C
    Xp Xm -> Xm Xp + [2] X0 C - [2] lambda X0 X0
    Xp X0 -> q^2 X0 Xp - q C Xp
    C  X0 -> X0 C
    Xp C  -> C Xp

The strategy decides whether the leftmost or the rightmost out-of-order pair is rewritten
first. Both must give the same normal form.
"""

import logging
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from .._scalars import FieldSpec, Scalar, lam, one, q_int, q_power
from ._generators import Generator, Monomial, Word

logger = logging.getLogger(__name__)

STRATEGY_LEFTMOST = "leftmost"
STRATEGY_RIGHTMOST = "rightmost"
STRATEGIES = (STRATEGY_LEFTMOST, STRATEGY_RIGHTMOST)

XM, X0, C, XP = Generator.XM, Generator.X0, Generator.C, Generator.XP

Terms = Tuple[Tuple[Monomial, Scalar], ...]


@lru_cache(maxsize=None)
def rewriting_rules(field: FieldSpec) -> Dict[Tuple[Generator, Generator], List[Tuple[Scalar, Word]]]:
    q2 = q_power(2, field)
    q1 = q_power(1, field)
    two = q_int(2, field)
    unit = one(field)
    return {
        (X0, XM): [(q2, (XM, X0)), (-q1, (XM, C))],
        (C, XM): [(unit, (XM, C))],
        (XP, XM): [(unit, (XM, XP)), (two, (X0, C)), (-(two * lam(field)), (X0, X0))],
        (XP, X0): [(q2, (X0, XP)), (-q1, (C, XP))],
        (C, X0): [(unit, (X0, C))],
        (XP, C): [(unit, (C, XP))],
    }


def find_inversion(word: Word, strategy: str = STRATEGY_LEFTMOST) -> Optional[int]:
    """Index i of an adjacent pair with word[i] > word[i+1] in PBW order, or None if sorted."""
    positions = range(len(word) - 1)
    if strategy == STRATEGY_RIGHTMOST:
        positions = reversed(positions)
    elif strategy != STRATEGY_LEFTMOST:
        raise ValueError(f"Unknown rewriting strategy '{strategy}'. Must be one of: {list(STRATEGIES)}")
    for i in positions:
        if word[i].rank > word[i + 1].rank:
            return i
    return None


@lru_cache(maxsize=None)
def word_normal_form(word: Word, field: FieldSpec, strategy: str = STRATEGY_LEFTMOST) -> Terms:
    """
    Normal form of a word in the unrestricted algebra.

    Returns:
        tuple: ((Monomial, Scalar), ...) with nonzero coefficients, sorted by monomial
    """
    i = find_inversion(word, strategy)
    if i is None:
        return ((Monomial.from_sorted_word(word), one(field)),)

    collected: Dict[Monomial, Scalar] = {}
    for coeff, replacement in rewriting_rules(field)[(word[i], word[i + 1])]:
        rewritten = word[:i] + replacement + word[i + 2:]
        for monomial, c in word_normal_form(rewritten, field, strategy):
            collected[monomial] = collected[monomial] + coeff * c if monomial in collected else coeff * c
    return tuple(sorted(((m, c) for m, c in collected.items() if not c.is_zero()), key=lambda item: item[0]))


def multiply_monomials(left: Monomial, right: Monomial, field: FieldSpec) -> Terms:
    return word_normal_form(left.word() + right.word(), field)
