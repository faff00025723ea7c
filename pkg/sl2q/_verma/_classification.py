import logging
from dataclasses import dataclass, field as dataclass_field
from enum import Enum
from typing import List, Optional

from ..constants import SEARCH_BOUND
from .._scalars import Scalar, lam, q_int, q_power
from ._action import mu_prime, singular_coefficient
from ._weights import HighestWeight

logger = logging.getLogger(__name__)


class LevelKind(str, Enum):
    CASE_A = "CaseA"
    CASE_B = "CaseB"
    PERIODIC = "Periodic"
    HALF_PERIODIC = "HalfPeriodic"


class WeightClass(str, Enum):
    GENERIC_IRREDUCIBLE = "GenericIrreducible"
    REDUCIBLE_A = "ReducibleA"
    REDUCIBLE_B = "ReducibleB"
    ROOT_GENERIC = "RootGeneric"
    ROOT_A = "RootA"
    ROOT_B = "RootB"
    ROOT_HALF = "RootHalf"


@dataclass(frozen=True)
class SingularLevel:
    """A level n at which Xm^n v_0 is singular, with the X0 eigenvalue it carries."""

    n: int
    kind: LevelKind
    mu_prime: Scalar
    p: Optional[int] = None

    @property
    def label(self) -> str:
        if self.kind in (LevelKind.PERIODIC, LevelKind.HALF_PERIODIC):
            return f"{self.kind.value}({self.p})"
        return self.kind.value

    def to_json(self) -> dict:
        return {"n": self.n, "kind": self.label, "mu_prime": self.mu_prime.to_json()}


@dataclass
class Classification:
    weight_class: WeightClass
    hw: HighestWeight
    search_bound: int
    n: Optional[int] = None
    levels: List[SingularLevel] = dataclass_field(default_factory=list)

    @property
    def label(self) -> str:
        if self.weight_class in (WeightClass.REDUCIBLE_A, WeightClass.ROOT_A):
            return f"{self.weight_class.value}({self.n})"
        return self.weight_class.value

    def level_numbers(self) -> List[int]:
        return [level.n for level in self.levels]


def satisfies_case_a(n: int, hw: HighestWeight) -> bool:
    """[2n] mu = q [n][n-1] c."""
    field = hw.field
    lhs = q_int(2 * n, field) * hw.mu
    rhs = q_power(1, field) * q_int(n, field) * q_int(n - 1, field) * hw.c
    return lhs == rhs


def satisfies_case_b(hw: HighestWeight) -> bool:
    """c = lambda mu."""
    return hw.c == lam(hw.field) * hw.mu


def _level_kind(m: int, weight_class: WeightClass, n: Optional[int], hw: HighestWeight) -> SingularLevel:
    N = hw.field.N
    if weight_class in (WeightClass.REDUCIBLE_B, WeightClass.ROOT_B):
        return SingularLevel(m, LevelKind.CASE_B, mu_prime(m, hw))
    if weight_class is WeightClass.ROOT_HALF:
        return SingularLevel(m, LevelKind.HALF_PERIODIC, mu_prime(m, hw), p=m // (N // 2))
    if N is not None and m % N == 0:
        return SingularLevel(m, LevelKind.PERIODIC, mu_prime(m, hw), p=m // N)
    if N is not None and weight_class is WeightClass.ROOT_A and m % N == n % N:
        return SingularLevel(m, LevelKind.CASE_A, mu_prime(m, hw), p=(m - n) // N)
    return SingularLevel(m, LevelKind.CASE_A, mu_prime(m, hw))


def _decide_class(hw: HighestWeight, search_bound: int):
    if hw.field.is_root_of_unity:
        N = hw.field.N
        if satisfies_case_b(hw):
            return WeightClass.ROOT_B, None
        for n in range(1, N):
            if 2 * n == N:
                continue
            if satisfies_case_a(n, hw):
                return WeightClass.ROOT_A, n
        if N % 2 == 0 and hw.c.is_zero() and not hw.mu.is_zero():
            return WeightClass.ROOT_HALF, None
        return WeightClass.ROOT_GENERIC, None

    # mu = c = 0 satisfies c = lambda mu and is assigned here
    if satisfies_case_b(hw):
        return WeightClass.REDUCIBLE_B, None
    for n in range(1, search_bound + 1):
        if satisfies_case_a(n, hw):
            return WeightClass.REDUCIBLE_A, n
    return WeightClass.GENERIC_IRREDUCIBLE, None


def classify_weight(hw: HighestWeight, search_bound: int = SEARCH_BOUND) -> Classification:
    """
    Decide the reducibility class of the Verma module with highest weight ``hw``.

    The reported singular levels are exactly the m in 1..search_bound where
    ``singular_coefficient(m, hw)`` vanishes, each labelled by the mechanism producing it.

    Args:
        hw (HighestWeight): The weight to classify
        search_bound (int): Largest level searched

    Returns:
        Classification: Class, the defining level if any, and the singular levels
    """
    if search_bound < 1:
        raise ValueError(f"search_bound must be >= 1, got {search_bound}")

    weight_class, n = _decide_class(hw, search_bound)
    levels = [
        _level_kind(m, weight_class, n, hw)
        for m in range(1, search_bound + 1)
        if singular_coefficient(m, hw).is_zero()
    ]
    logger.debug(f"[classify_weight] {hw.render()} -> {weight_class.value} n={n}, levels={[lv.n for lv in levels]}")
    return Classification(weight_class, hw, search_bound, n, levels)
