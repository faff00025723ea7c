from ._element import (
    AlgebraElement,
    casimir2,
    commutator,
    multiply,
    normal_form,
    product,
    restricted_reduce,
    restriction_constant,
)
from ._generators import UNIT, Generator, Monomial, parse_word
from ._rewriting import STRATEGIES, STRATEGY_LEFTMOST, STRATEGY_RIGHTMOST, word_normal_form

__all__ = [
    'AlgebraElement',
    'Generator',
    'Monomial',
    'UNIT',
    'STRATEGIES',
    'STRATEGY_LEFTMOST',
    'STRATEGY_RIGHTMOST',
    'casimir2',
    'commutator',
    'multiply',
    'normal_form',
    'parse_word',
    'product',
    'restricted_reduce',
    'restriction_constant',
    'word_normal_form',
]
