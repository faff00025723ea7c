"""
Exact scalars: rational functions of q, or elements of the cyclotomic field Q(q) with q = exp(i*pi/N).

Both kinds share the ``Scalar`` interface so that algebra, Verma and matrix code never
branch on the field. Arithmetic between scalars of different fields raises ``FieldMismatch``.
"""

import cmath
import logging
from abc import ABC, abstractmethod
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Optional, Union

import numpy as np
from sympy import QQ, cyclotomic_poly
from sympy.polys.fields import field as fraction_field
from sympy.polys.rings import ring as polynomial_ring

from ..constants import POLE_TOLERANCE, ROOT_OF_UNITY_TOLERANCE
from .._errors import BadParity, DivisionByZero, FieldMismatch, PoleAtEvaluationPoint
from ._field import FieldSpec

logger = logging.getLogger(__name__)

Number = Union[int, Fraction]

# Q(q): elements are kept cancelled with a positive leading denominator coefficient
QFIELD, Q = fraction_field("q", QQ)


def _to_qq(value: Number):
    value = Fraction(value)
    return QQ(value.numerator, value.denominator)


def _to_fraction(coeff) -> Fraction:
    return Fraction(int(coeff.numerator), int(coeff.denominator))


def _constant(poly) -> Optional[Fraction]:
    """The value of a polynomial with no positive powers, None otherwise."""
    if any(monom[0] for monom in poly.keys()):
        return None
    return sum((_to_fraction(c) for c in poly.values()), Fraction(0))


def format_rational(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text)


@lru_cache(maxsize=None)
def cyclotomic_ring(N: int):
    """
    Polynomial ring Q[z] and the 2N-th cyclotomic polynomial it is reduced by.

    Returns:
        tuple: (ring, generator z, modulus, degree of the modulus)
    """
    ring, z = polynomial_ring("z", QQ)
    coeffs = [int(c) for c in cyclotomic_poly(2 * N, polys=True).all_coeffs()]
    modulus = ring.from_list(coeffs)
    return ring, z, modulus, modulus.degree()


class Scalar(ABC):
    """An immutable element of the field described by ``self.field``."""

    __slots__ = ("field",)

    def __init__(self, field: FieldSpec):
        self.field = field

    # backend hooks

    @abstractmethod
    def _add(self, other: "Scalar") -> "Scalar":
        ...

    @abstractmethod
    def _mul(self, other: "Scalar") -> "Scalar":
        ...

    @abstractmethod
    def _neg(self) -> "Scalar":
        ...

    @abstractmethod
    def _inv(self) -> "Scalar":
        ...

    @abstractmethod
    def _key(self):
        ...

    @abstractmethod
    def is_zero(self) -> bool:
        ...

    @abstractmethod
    def evaluate_numeric(self, q_value=None) -> complex:
        ...

    @abstractmethod
    def to_json(self) -> dict:
        ...

    @abstractmethod
    def render(self) -> str:
        ...

    # coercion

    def _coerce(self, other):
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldMismatch(f"Cannot combine scalars over {self.field} and {other.field}")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return from_fraction(other, self.field)
        return NotImplemented

    # arithmetic

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        return self._add(other)

    __radd__ = __add__

    def __neg__(self):
        return self._neg()

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero():
            return self
        if other.is_zero():
            return other
        return self._mul(other)

    __rmul__ = __mul__

    def inv(self) -> "Scalar":
        if self.is_zero():
            raise DivisionByZero(f"Inverse of zero in {self.field}")
        return self._inv()

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inv()

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        base = self if exponent >= 0 else self.inv()
        result = one(self.field)
        for _ in range(abs(exponent)):
            result = result * base
        return result

    # comparison

    def __eq__(self, other):
        if isinstance(other, np.ndarray):
            return NotImplemented
        try:
            other = self._coerce(other)
        except FieldMismatch:
            return False
        if other is NotImplemented:
            return NotImplemented
        return self._key() == other._key()

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def rational_value(self) -> Optional[Fraction]:
        """The element as a Fraction when it lies in Q, None otherwise."""
        return None

    def __hash__(self):
        # rational elements hash like the int or Fraction they compare equal to
        value = self.rational_value()
        if value is not None:
            return hash(value)
        return hash((self.field, self._key()))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return f"{type(self).__name__}({self.render()}, field={self.field})"

    def __str__(self):
        return self.render()


class RationalFunction(Scalar):
    """Element of Q(q), wrapping a cancelled sympy fraction-field element."""

    __slots__ = ("value",)

    def __init__(self, value):
        super().__init__(FieldSpec.generic())
        self.value = value

    def _add(self, other):
        return RationalFunction(self.value + other.value)

    def _mul(self, other):
        return RationalFunction(self.value * other.value)

    def _neg(self):
        return RationalFunction(-self.value)

    def _inv(self):
        return RationalFunction(1 / self.value)

    def _key(self):
        return (tuple(sorted(self.value.numer.items())), tuple(sorted(self.value.denom.items())))

    def is_zero(self) -> bool:
        return not self.value.numer

    def rational_value(self) -> Optional[Fraction]:
        numer, denom = _constant(self.value.numer), _constant(self.value.denom)
        if numer is None or denom is None:
            return None
        return numer / denom

    def evaluate_numeric(self, q_value=None) -> complex:
        if q_value is None:
            raise ValueError("A generic scalar needs an explicit q value")
        q_value = complex(q_value)
        denom = _evaluate_terms(self.value.denom, q_value)
        if abs(denom) < POLE_TOLERANCE:
            raise PoleAtEvaluationPoint(f"{self.render()} has a pole at q = {q_value}")
        return _evaluate_terms(self.value.numer, q_value) / denom

    def laurent_parts(self):
        """
        Numerator and denominator as Laurent polynomials {exponent: Fraction}.

        The denominator is normalized so its lowest-degree term is exactly 1·q^0.
        """
        denom = {monom[0]: _to_fraction(c) for monom, c in self.value.denom.items()}
        numer = {monom[0]: _to_fraction(c) for monom, c in self.value.numer.items()}
        low = min(denom)
        scale = denom[low]
        denom = {e - low: c / scale for e, c in denom.items()}
        numer = {e - low: c / scale for e, c in numer.items()}
        return numer, denom

    def to_json(self) -> dict:
        numer, denom = self.laurent_parts()
        return {
            "num": {str(e): format_rational(c) for e, c in sorted(numer.items())},
            "den": {str(e): format_rational(c) for e, c in sorted(denom.items())},
        }

    def render(self) -> str:
        return str(self.value.as_expr())


class CyclotomicNumber(Scalar):
    """Element of Q(z) with z = exp(i*pi/N), stored reduced modulo the 2N-th cyclotomic polynomial."""

    __slots__ = ("value",)

    def __init__(self, field: FieldSpec, value):
        super().__init__(field)
        _, _, modulus, _ = cyclotomic_ring(field.N)
        self.value = value % modulus

    def _add(self, other):
        return CyclotomicNumber(self.field, self.value + other.value)

    def _mul(self, other):
        return CyclotomicNumber(self.field, self.value * other.value)

    def _neg(self):
        return CyclotomicNumber(self.field, -self.value)

    def _inv(self):
        _, _, modulus, _ = cyclotomic_ring(self.field.N)
        s, _, h = self.value.gcdex(modulus)
        if h != 1:
            raise DivisionByZero(f"{self.render()} is not invertible modulo the cyclotomic polynomial")
        return CyclotomicNumber(self.field, s)

    def _key(self):
        return tuple(sorted(self.value.items()))

    def is_zero(self) -> bool:
        return not self.value

    def rational_value(self) -> Optional[Fraction]:
        return _constant(self.value)

    def coordinates(self):
        """Coordinates in the power basis 1, z, ..., z^(phi(2N)-1), lowest first."""
        _, _, _, degree = cyclotomic_ring(self.field.N)
        coords = [Fraction(0)] * degree
        for monom, c in self.value.items():
            coords[monom[0]] = _to_fraction(c)
        return coords

    def evaluate_numeric(self, q_value=None) -> complex:
        root = cmath.exp(1j * cmath.pi / self.field.N)
        if q_value is not None and abs(complex(q_value) - root) > ROOT_OF_UNITY_TOLERANCE:
            raise FieldMismatch(f"Scalars over {self.field} can only be evaluated at q = exp(i*pi/{self.field.N})")
        return _evaluate_terms(self.value, root)

    def to_json(self) -> dict:
        return {"N": self.field.N, "coords": [format_rational(c) for c in self.coordinates()]}

    def render(self) -> str:
        return str(self.value.as_expr())


def _evaluate_terms(poly, q_value: complex) -> complex:
    total = 0j
    for monom, c in poly.items():
        total += float(_to_fraction(c)) * q_value ** monom[0]
    return total


# constructors


def from_fraction(value: Number, field: FieldSpec) -> Scalar:
    if field.is_root_of_unity:
        ring, _, _, _ = cyclotomic_ring(field.N)
        return CyclotomicNumber(field, ring.ground_new(_to_qq(value)))
    return RationalFunction(QFIELD.ground_new(_to_qq(value)))


def zero(field: FieldSpec) -> Scalar:
    return from_fraction(0, field)


def one(field: FieldSpec) -> Scalar:
    return from_fraction(1, field)


def q_power(k: int, field: FieldSpec) -> Scalar:
    """q^k; at a root of unity the exponent is taken modulo 2N."""
    if field.is_root_of_unity:
        _, z, _, _ = cyclotomic_ring(field.N)
        return CyclotomicNumber(field, z ** (k % (2 * field.N)))
    return RationalFunction(Q ** k)


def q_gen(field: FieldSpec) -> Scalar:
    return q_power(1, field)


def lam(field: FieldSpec) -> Scalar:
    """lambda = q - q^-1."""
    return q_power(1, field) - q_power(-1, field)


def from_laurent(coefficients: Dict[int, Number], field: FieldSpec) -> Scalar:
    """Sum of c * q^e over a {e: c} mapping."""
    total = zero(field)
    for exponent, coeff in coefficients.items():
        if coeff:
            total = total + q_power(exponent, field) * Fraction(coeff)
    return total


def imaginary_unit(field: FieldSpec) -> Scalar:
    """
    The square root of -1 with positive imaginary part, z^(N/2) = exp(i*pi/2).

    Only exists in the field when N is even.
    """
    if not field.is_root_of_unity or field.N % 2:
        raise BadParity(f"The imaginary unit is not an element of {field}; an even N is required")
    return q_power(field.N // 2, field)


def scalar_from_json(document: dict, field: FieldSpec) -> Scalar:
    """Inverse of ``Scalar.to_json`` for the given field."""
    if not isinstance(document, dict):
        raise ValueError(f"Expected a scalar object, got {document!r}")
    if field.is_root_of_unity:
        if "coords" not in document or "N" not in document:
            raise ValueError(f"Expected a cyclotomic scalar with 'N' and 'coords' over {field}, got {document}")
        if int(document["N"]) != field.N:
            raise FieldMismatch(f"Scalar encoded over root{document['N']} cannot be read into {field}")
        coords = {e: parse_rational(c) for e, c in enumerate(document["coords"])}
        return from_laurent(coords, field)
    if "num" not in document or "den" not in document:
        raise ValueError(f"Expected a generic scalar with 'num' and 'den', got {document}")
    numer = from_laurent({int(e): parse_rational(c) for e, c in document["num"].items()}, field)
    denom = from_laurent({int(e): parse_rational(c) for e, c in document["den"].items()}, field)
    return numer / denom


def as_scalar(value, field: FieldSpec) -> Scalar:
    """Accept a Scalar of the right field, an int or a Fraction."""
    if isinstance(value, Scalar):
        if value.field != field:
            raise FieldMismatch(f"Expected a scalar over {field}, got one over {value.field}")
        return value
    return from_fraction(value, field)
