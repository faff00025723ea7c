"""
Action of the generators on the Verma basis v_k = Xm^k v_0.

    Xp v_k = q^(2k-2) (c - lambda mu) ([2k] mu - q [k][k-1] c) v_(k-1)
    Xm v_k = v_(k+1)
    X0 v_k = (q^(2k) mu - q^k [k] c) v_k
    C  v_k = c v_k
"""

import logging
from typing import Dict, List, Sequence, Tuple

from .._algebra import AlgebraElement, Generator
from .._errors import FieldMismatch
from .._scalars import Scalar, lam, q_int, q_power
from ._weights import HighestWeight

logger = logging.getLogger(__name__)

Vector = Dict[int, Scalar]


def raising_coefficient(k: int, hw: HighestWeight) -> Scalar:
    field = hw.field
    return (
        q_power(2 * k - 2, field)
        * (hw.c - lam(field) * hw.mu)
        * (q_int(2 * k, field) * hw.mu - q_power(1, field) * q_int(k, field) * q_int(k - 1, field) * hw.c)
    )


def weight_at(k: int, hw: HighestWeight) -> Scalar:
    """X0 eigenvalue on v_k."""
    field = hw.field
    return q_power(2 * k, field) * hw.mu - q_power(k, field) * q_int(k, field) * hw.c


def verma_action(generator: Generator, k: int, hw: HighestWeight) -> List[Tuple[int, Scalar]]:
    """
    Image of v_k under one generator as (index, coefficient) pairs.

    The coefficient is reported even when it is zero; only Xp v_0 is empty.
    """
    if k < 0:
        raise ValueError(f"Basis index must be >= 0, got {k}")
    generator = Generator(generator)
    if generator is Generator.XP:
        return [] if k == 0 else [(k - 1, raising_coefficient(k, hw))]
    if generator is Generator.XM:
        return [(k + 1, q_power(0, hw.field))]
    if generator is Generator.X0:
        return [(k, weight_at(k, hw))]
    return [(k, hw.c)]


def _apply_generator(generator: Generator, vector: Vector, hw: HighestWeight) -> Vector:
    result: Vector = {}
    for k, coeff in vector.items():
        for index, c in verma_action(generator, k, hw):
            value = coeff * c
            result[index] = result[index] + value if index in result else value
    return {k: c for k, c in result.items() if not c.is_zero()}


def apply_word(word: Sequence[Generator], k: int, hw: HighestWeight) -> Vector:
    """Act with the product g_1 g_2 ... g_m on v_k; g_m acts first."""
    vector: Vector = {k: q_power(0, hw.field)}
    for generator in reversed(tuple(word)):
        vector = _apply_generator(Generator(generator), vector, hw)
        if not vector:
            break
    return vector


def apply_element(x: AlgebraElement, k: int, hw: HighestWeight) -> Vector:
    """Act with a normal-form element on v_k, reading each monomial Xm^a X0^b C^d Xp^e right to left."""
    if x.field != hw.field:
        raise FieldMismatch(f"Element over {x.field} cannot act on a Verma module over {hw.field}")
    result: Vector = {}
    for monomial, coeff in x.terms.items():
        if monomial.e > k:
            continue
        value = coeff
        for j in range(monomial.e):
            value = value * raising_coefficient(k - j, hw)
        index = k - monomial.e
        value = value * (hw.c ** monomial.d) * (weight_at(index, hw) ** monomial.b)
        index += monomial.a
        result[index] = result[index] + value if index in result else value
    return {i: c for i, c in result.items() if not c.is_zero()}


def singular_coefficient(n: int, hw: HighestWeight) -> Scalar:
    """
    Coefficient of Xp Xm^n v_0 on v_(n-1):
    q^(2n-2) (c - lambda mu) ([2n] mu - q [n][n-1] c). Xm^n v_0 is singular iff it vanishes.
    """
    if n < 1:
        raise ValueError(f"Singular levels start at n = 1, got {n}")
    return raising_coefficient(n, hw)


def mu_prime(n: int, hw: HighestWeight) -> Scalar:
    """X0 eigenvalue q^(2n) mu - q^n [n] c of the vector at level n."""
    if n < 1:
        raise ValueError(f"Singular levels start at n = 1, got {n}")
    return weight_at(n, hw)
