from ._field import FieldSpec
from ._parsing import parse_scalar
from ._qnumbers import q_factorial, q_int
from ._scalar import (
    CyclotomicNumber,
    RationalFunction,
    Scalar,
    as_scalar,
    from_fraction,
    from_laurent,
    imaginary_unit,
    lam,
    one,
    q_gen,
    q_power,
    scalar_from_json,
    zero,
)

__all__ = [
    'FieldSpec',
    'Scalar',
    'RationalFunction',
    'CyclotomicNumber',
    'q_int',
    'q_factorial',
    'parse_scalar',
    'as_scalar',
    'from_fraction',
    'from_laurent',
    'imaginary_unit',
    'lam',
    'one',
    'q_gen',
    'q_power',
    'scalar_from_json',
    'zero',
]
