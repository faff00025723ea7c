import logging
from dataclasses import dataclass
from typing import List, Optional

import numpy as np

from .._algebra import Generator
from .._errors import BadLevel, ZeroC
from .._scalars import FieldSpec, Scalar, as_scalar, q_factorial, q_int, q_power
from .._verma import HighestWeight, apply_word, satisfies_case_a
from ._constructors import case_a_mu
from ._representation import zero_matrix

logger = logging.getLogger(__name__)


@dataclass
class GramForm:
    """Diagonal of the Shapovalov form (w_k, w_k), k = 0..dim-1."""

    entries: List[Scalar]
    field: FieldSpec

    @property
    def dim(self) -> int:
        return len(self.entries)

    def to_json(self) -> dict:
        return {"entries": [entry.to_json() for entry in self.entries]}

    def __eq__(self, other):
        if not isinstance(other, GramForm):
            return NotImplemented
        return self.field == other.field and self.entries == other.entries


def _factorial_part(k: int, n: int, field: FieldSpec) -> Scalar:
    """q^(k(k+1-n)) [k]! [n-1]!/[n-1-k]!."""
    return (
        q_power(k * (k + 1 - n), field)
        * q_factorial(k, field)
        * q_factorial(n - 1, field)
        / q_factorial(n - 1 - k, field)
    )


def gram_L_n_c(n: int, c, field: Optional[FieldSpec] = None) -> GramForm:
    """
    Closed-form Shapovalov entries for L_{n,c}:
    (w_k, w_k) = q^(k(k+1-n)) [k]! [n-1]!/[n-1-k]! (c [2][n]/[2n])^(2k).
    """
    field = field or FieldSpec.generic()
    if n < 1:
        raise BadLevel(f"n must be >= 1, got {n}")
    c = as_scalar(c, field)
    if c.is_zero():
        raise ZeroC("The Shapovalov form of LnC needs c != 0")
    ratio = c * q_int(2, field) * q_int(n, field) / q_int(2 * n, field)
    return GramForm([_factorial_part(k, n, field) * ratio ** (2 * k) for k in range(n)], field)


def gram_TL_n_eps(n: int, eps: int, field: Optional[FieldSpec] = None) -> GramForm:
    """(w_k, w_k) = q^(k(k+1-n)) [k]! [n-1]!/[n-1-k]! for the restricted irrep; eps only fixes the weight."""
    field = field or FieldSpec.generic()
    if eps not in (1, -1):
        raise ValueError(f"eps must be +1 or -1, got {eps}")
    if n < 1:
        raise BadLevel(f"n must be >= 1, got {n}")
    return GramForm([_factorial_part(k, n, field) for k in range(n)], field)


def _pairing(j: int, k: int, hw: HighestWeight) -> Scalar:
    """<v_0| Xp^j Xm^k |v_0>: the v_0 component of Xp^j Xm^k v_0."""
    word = (Generator.XP,) * j + (Generator.XM,) * k
    return apply_word(word, 0, hw).get(0, as_scalar(0, hw.field))


def gram_from_definition(n: int, hw: HighestWeight) -> GramForm:
    """
    Shapovalov entries computed from the Verma action, (w_k, w_k) = <Xp^k Xm^k>.

    ``hw`` must have its singular vector at level n.
    """
    if n < 1 or not satisfies_case_a(n, hw):
        raise BadLevel(f"{hw.render()} has no singular vector at level n={n}")
    entries = [_pairing(k, k, hw) for k in range(n)]
    logger.debug(f"[gram_from_definition] n={n}: {len(entries)} entries")
    return GramForm(entries, hw.field)


def lnc_weight(n: int, c, field: Optional[FieldSpec] = None) -> HighestWeight:
    """The highest weight (q[n][n-1]c/[2n], c) of L_{n,c}."""
    field = field or FieldSpec.generic()
    return HighestWeight(case_a_mu(n, c, field), as_scalar(c, field), field)


def shapovalov_matrix(n: int, hw: HighestWeight) -> np.ndarray:
    """Full n x n matrix (w_j, w_k) = <Xp^j Xm^k>; diagonal for any weight."""
    matrix = zero_matrix(n, hw.field)
    for j in range(n):
        for k in range(n):
            matrix[j, k] = _pairing(j, k, hw)
    return matrix
