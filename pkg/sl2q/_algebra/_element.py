import logging
from typing import Dict, Iterable, Mapping, Sequence

from .._errors import FieldMismatch
from .._scalars import FieldSpec, Scalar, as_scalar, lam, one, q_int, q_power
from ._generators import UNIT, Generator, Monomial, Word
from ._rewriting import STRATEGY_LEFTMOST, multiply_monomials, word_normal_form

logger = logging.getLogger(__name__)


class AlgebraElement:
    """
    A finite combination of PBW monomials Xm^a X0^b C^d Xp^e.

    ``restricted`` elements live in the quotient where C^2 = 1 + lambda^2/[2] C2,
    and carry no monomial with C-degree above one.
    """

    __slots__ = ("field", "restricted", "terms")

    def __init__(self, terms: Mapping[Monomial, Scalar], field: FieldSpec, restricted: bool = False):
        self.field = field
        self.restricted = restricted
        self.terms: Dict[Monomial, Scalar] = {
            Monomial(*m): c for m, c in terms.items() if not c.is_zero()
        }

    @classmethod
    def zero(cls, field: FieldSpec, restricted: bool = False) -> "AlgebraElement":
        return cls({}, field, restricted)

    @classmethod
    def unit(cls, field: FieldSpec, restricted: bool = False) -> "AlgebraElement":
        return cls({UNIT: one(field)}, field, restricted)

    @classmethod
    def monomial(cls, monomial: Monomial, field: FieldSpec, restricted: bool = False) -> "AlgebraElement":
        element = cls({Monomial(*monomial): one(field)}, field, False)
        return restricted_reduce(element) if restricted else element._with_flag(restricted)

    @classmethod
    def generator(cls, generator: Generator, field: FieldSpec, restricted: bool = False) -> "AlgebraElement":
        return cls.monomial(Monomial.from_sorted_word((Generator(generator),)), field, restricted)

    def _with_flag(self, restricted: bool) -> "AlgebraElement":
        return AlgebraElement(self.terms, self.field, restricted)

    def _check_compatible(self, other: "AlgebraElement"):
        if other.field != self.field:
            raise FieldMismatch(f"Algebra elements over {self.field} and {other.field} cannot be combined")
        if other.restricted != self.restricted:
            raise FieldMismatch("Cannot combine a restricted and an unrestricted algebra element")

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, monomial: Monomial) -> Scalar:
        return self.terms.get(Monomial(*monomial), as_scalar(0, self.field))

    def scale(self, factor) -> "AlgebraElement":
        factor = as_scalar(factor, self.field)
        return AlgebraElement({m: c * factor for m, c in self.terms.items()}, self.field, self.restricted)

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        self._check_compatible(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms[m] + c if m in terms else c
        return AlgebraElement(terms, self.field, self.restricted)

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement({m: -c for m, c in self.terms.items()}, self.field, self.restricted)

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return (
            self.field == other.field
            and self.restricted == other.restricted
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.field, self.restricted, frozenset(self.terms.items())))

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda item: item[0])

    def render(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"({c.render()})·{m.render()}" for m, c in self.sorted_terms())

    def to_json(self) -> list:
        return [{"monomial": list(m), "coeff": c.to_json()} for m, c in self.sorted_terms()]

    def __repr__(self):
        return f"AlgebraElement({self.render()}, field={self.field}, restricted={self.restricted})"


def normal_form(
    word: Sequence[Generator],
    field: FieldSpec,
    restricted: bool = False,
    strategy: str = STRATEGY_LEFTMOST,
) -> AlgebraElement:
    """
    PBW normal form of a word in the generators.

    Args:
        word: Generators read left to right; the empty word is the unit
        field (FieldSpec): Coefficient field
        restricted (bool): Reduce in the restricted quotient as well
        strategy (str): Which out-of-order pair is rewritten first

    Returns:
        AlgebraElement: The normal form
    """
    word: Word = tuple(Generator(g) for g in word)
    element = AlgebraElement(dict(word_normal_form(word, field, strategy)), field, False)
    return restricted_reduce(element) if restricted else element


def multiply(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    x._check_compatible(y)
    terms: Dict[Monomial, Scalar] = {}
    for m1, c1 in x.terms.items():
        for m2, c2 in y.terms.items():
            coeff = c1 * c2
            for m, c in multiply_monomials(m1, m2, x.field):
                terms[m] = terms[m] + coeff * c if m in terms else coeff * c
    product = AlgebraElement(terms, x.field, False)
    return restricted_reduce(product) if x.restricted else product


def product(elements: Iterable[AlgebraElement]) -> AlgebraElement:
    elements = list(elements)
    if not elements:
        raise ValueError("product of an empty sequence needs a field; use AlgebraElement.unit")
    result = elements[0]
    for element in elements[1:]:
        result = multiply(result, element)
    return result


def commutator(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    return multiply(x, y) - multiply(y, x)


def casimir2(field: FieldSpec, restricted: bool = False) -> AlgebraElement:
    """C2 = [2] X0^2 + q Xm Xp + q^-1 Xp Xm, in normal form."""
    X0, XM, XP = Generator.X0, Generator.XM, Generator.XP
    result = (
        normal_form((X0, X0), field).scale(q_int(2, field))
        + normal_form((XM, XP), field).scale(q_power(1, field))
        + normal_form((XP, XM), field).scale(q_power(-1, field))
    )
    return result._with_flag(restricted)


def restriction_constant(field: FieldSpec) -> Scalar:
    """kappa = lambda^2/[2] in C^2 = 1 + kappa C2."""
    return lam(field) * lam(field) / q_int(2, field)


def restricted_reduce(x: AlgebraElement) -> AlgebraElement:
    """
    Eliminate every C^d with d >= 2 using C^2 = 1 + lambda^2/[2] C2.

    Xm^a X0^b C^d Xp^e becomes Xm^a X0^b C^(d-2) Xp^e + kappa Xm^a C2 X0^b C^(d-2) Xp^e,
    repeated until no term has C-degree above one. The pair (b + d, d) strictly drops.
    """
    field = x.field
    kappa = None
    c2 = None
    terms = dict(x.terms)
    while True:
        high = [m for m in terms if m.d >= 2]
        if not high:
            break
        if kappa is None:
            kappa = restriction_constant(field)
            c2 = casimir2(field)
        for m in high:
            coeff = terms.pop(m)
            lowered = Monomial(m.a, m.b, m.d - 2, m.e)
            expansion = AlgebraElement({lowered: one(field)}, field) + multiply(
                multiply(AlgebraElement.monomial(Monomial(a=m.a), field), c2),
                AlgebraElement.monomial(Monomial(0, m.b, m.d - 2, m.e), field),
            ).scale(kappa)
            for mm, c in expansion.terms.items():
                value = coeff * c
                terms[mm] = terms[mm] + value if mm in terms else value
        terms = {m: c for m, c in terms.items() if not c.is_zero()}
    logger.debug(f"[restricted_reduce] reduced to {len(terms)} terms")
    return AlgebraElement(terms, field, True)
