import re
from fractions import Fraction

from ._field import FieldSpec
from ._scalar import Scalar, q_power, zero

# one signed term: coefficient, q, or coefficient*q^exponent
TERM_PATTERN = re.compile(r"([+-]?)(\d+(?:/\d+)?)?(?:\*?(q)(?:\^\(?(-?\d+)\)?)?)?")


def parse_scalar(text: str, field: FieldSpec) -> Scalar:
    """
    Parse a Laurent polynomial in q with rational coefficients.

    Grammar: term ((+|-) term)*, term = coef | [coef]q[^int], e.g. "3/2", "-1", "q-q^-1", "1+2q^-1".

    Raises:
        ValueError: If the text does not match the grammar
    """
    source = text
    text = text.replace(" ", "")
    if not text:
        raise ValueError("Empty scalar")

    total = zero(field)
    pos = 0
    while pos < len(text):
        match = TERM_PATTERN.match(text, pos)
        sign, coeff, has_q, exponent = match.groups()
        if match.end() == pos or (coeff is None and has_q is None):
            raise ValueError(f"Cannot parse scalar '{source}' at position {pos}")
        if pos > 0 and not sign:
            raise ValueError(f"Missing '+' or '-' before term at position {pos} in '{source}'")
        value = Fraction(coeff) if coeff is not None else Fraction(1)
        if sign == "-":
            value = -value
        power = (int(exponent) if exponent is not None else 1) if has_q else 0
        total = total + q_power(power, field) * value
        pos = match.end()
    return total
