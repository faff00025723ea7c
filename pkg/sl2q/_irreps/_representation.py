import logging
from dataclasses import dataclass, field as dataclass_field
from enum import Enum
from typing import Dict, Iterable, Optional, Tuple

import numpy as np

from .._algebra import Generator
from .._scalars import FieldSpec, Scalar, one, zero
from .._verma import HighestWeight, raising_coefficient, weight_at

logger = logging.getLogger(__name__)


class Family(str, Enum):
    """Irrep families of the catalogue, plus the quotient L'_{n,N} used for the isomorphism check."""

    LnC = "LnC"
    LMu = "LMu"
    LLambdaN = "LLambdaN"
    LnCN = "LnCN"
    LMuNtilde = "LMuNtilde"
    TLnEps = "TLnEps"
    TLLambdaN = "TLLambdaN"
    TLnEpsN = "TLnEpsN"
    TLEpsNtilde = "TLEpsNtilde"
    LPrimenN = "LPrimenN"

    @property
    def restricted(self) -> bool:
        return self.value.startswith("TL")


MATRIX_NAMES = ("Xp", "Xm", "X0", "C")


def zero_matrix(dim: int, field: FieldSpec) -> np.ndarray:
    matrix = np.empty((dim, dim), dtype=object)
    for i in range(dim):
        for j in range(dim):
            matrix[i, j] = zero(field)
    return matrix


def identity_matrix(dim: int, field: FieldSpec) -> np.ndarray:
    matrix = zero_matrix(dim, field)
    for i in range(dim):
        matrix[i, i] = one(field)
    return matrix


def diagonal_matrix(values: Iterable[Scalar], field: FieldSpec) -> np.ndarray:
    values = list(values)
    matrix = zero_matrix(len(values), field)
    for i, value in enumerate(values):
        matrix[i, i] = value
    return matrix


def lowering_matrix(dim: int, field: FieldSpec) -> np.ndarray:
    """Xm w_k = w_(k+1), Xm w_(dim-1) = 0, acting on column vectors."""
    matrix = zero_matrix(dim, field)
    for k in range(dim - 1):
        matrix[k + 1, k] = one(field)
    return matrix


def raising_matrix(coefficients: Iterable[Scalar], field: FieldSpec) -> np.ndarray:
    """Xp w_k = coefficients[k-1] w_(k-1) for k = 1..dim-1."""
    coefficients = list(coefficients)
    matrix = zero_matrix(len(coefficients) + 1, field)
    for k, value in enumerate(coefficients, start=1):
        matrix[k - 1, k] = value
    return matrix


def first_nonzero(matrix: np.ndarray) -> Optional[Tuple[int, int, Scalar]]:
    rows, cols = matrix.shape
    for i in range(rows):
        for j in range(cols):
            entry = matrix[i, j]
            nonzero = not entry.is_zero() if isinstance(entry, Scalar) else entry != 0
            if nonzero:
                return i, j, entry
    return None


def is_zero_matrix(matrix: np.ndarray) -> bool:
    return first_nonzero(matrix) is None


@dataclass
class Representation:
    """
    A finite-dimensional representation given by its four generator matrices.

    Matrices are numpy object arrays of Scalars acting on column vectors in the basis
    w_k = Xm^k w_0, k = 0..dim-1.
    """

    family: Family
    field: FieldSpec
    dim: int
    xp: np.ndarray
    xm: np.ndarray
    x0: np.ndarray
    cm: np.ndarray
    params: Dict[str, object] = dataclass_field(default_factory=dict)

    @property
    def restricted(self) -> bool:
        return Family(self.family).restricted

    def matrix(self, generator) -> np.ndarray:
        generator = Generator(generator)
        return {
            Generator.XP: self.xp,
            Generator.XM: self.xm,
            Generator.X0: self.x0,
            Generator.C: self.cm,
        }[generator]

    def matrices(self) -> Dict[str, np.ndarray]:
        return dict(zip(MATRIX_NAMES, (self.xp, self.xm, self.x0, self.cm)))

    def highest_weight(self) -> HighestWeight:
        return HighestWeight(self.x0[0, 0], self.cm[0, 0], self.field, False)

    def __repr__(self):
        return f"Representation(family={Family(self.family).value}, field={self.field}, dim={self.dim})"


def truncated_verma(hw: HighestWeight, dim: int, family: Family, params: Dict[str, object]) -> Representation:
    """The first ``dim`` Verma basis vectors with Xm v_(dim-1) set to zero."""
    field = hw.field
    rep = Representation(
        family=family,
        field=field,
        dim=dim,
        xp=raising_matrix((raising_coefficient(k, hw) for k in range(1, dim)), field),
        xm=lowering_matrix(dim, field),
        x0=diagonal_matrix((weight_at(k, hw) for k in range(dim)), field),
        cm=diagonal_matrix((hw.c for _ in range(dim)), field),
        params=params,
    )
    logger.debug(f"[truncated_verma] {family.value} dim={dim} over {field}")
    return rep
