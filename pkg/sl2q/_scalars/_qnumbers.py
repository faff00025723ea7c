from functools import lru_cache

from ._field import FieldSpec
from ._scalar import Scalar, one, q_power, zero


@lru_cache(maxsize=None)
def q_int(k: int, field: FieldSpec) -> Scalar:
    """
    The q-integer [k] = (q^k - q^-k)/(q - q^-1), built as the Laurent sum
    q^(k-1) + q^(k-3) + ... + q^(1-k) so no division happens.

    Args:
        k (int): Any integer; [-k] = -[k] and [0] = 0
        field (FieldSpec): Field the result lives in

    Returns:
        Scalar: [k] in ``field``
    """
    if k < 0:
        return -q_int(-k, field)
    total = zero(field)
    for j in range(k):
        total = total + q_power(k - 1 - 2 * j, field)
    return total


@lru_cache(maxsize=None)
def q_factorial(k: int, field: FieldSpec) -> Scalar:
    """[k]! = [k][k-1]...[1], with [0]! = 1."""
    if k < 0:
        raise ValueError(f"q_factorial needs k >= 0, got {k}")
    result = one(field)
    for j in range(1, k + 1):
        result = result * q_int(j, field)
    return result
