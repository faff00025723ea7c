from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings

from sl2q._scalars import FieldSpec, lam
from sl2q._verma import HighestWeight, WeightClass, classify_weight, restricted_generic_weight

settings.register_profile(
    "exact",
    max_examples=25,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("exact")

# candidate weights tried in order until one has no special singular vector
WEIGHT_CANDIDATES = [(1, 3), (2, 5), (1, 7), (3, 2), (2, 7), (5, 3)]
RESTRICTED_CANDIDATES = [Fraction(1), Fraction(1, 2), Fraction(3), Fraction(1, 3), Fraction(4), Fraction(5)]


def admissible_weight(N: int) -> HighestWeight:
    field = FieldSpec.root_of_unity(N)
    for mu, c in WEIGHT_CANDIDATES:
        hw = HighestWeight(mu, c, field)
        if classify_weight(hw, search_bound=N).weight_class is WeightClass.ROOT_GENERIC:
            return hw
    raise AssertionError(f"no admissible weight among the candidates for N={N}")


def admissible_restricted_weight(N: int) -> HighestWeight:
    field = FieldSpec.root_of_unity(N)
    for u in RESTRICTED_CANDIDATES:
        hw = restricted_generic_weight(u, field)
        if classify_weight(hw, search_bound=N).weight_class is WeightClass.ROOT_GENERIC:
            return hw
    raise AssertionError(f"no admissible restricted weight among the candidates for N={N}")


def assert_same_matrices(left, right):
    assert left.dim == right.dim
    for name, matrix in left.matrices().items():
        other = right.matrices()[name]
        for i in range(left.dim):
            for j in range(left.dim):
                assert matrix[i, j] == other[i, j], f"{name}[{i}, {j}] differs"


@pytest.fixture
def generic():
    return FieldSpec.generic()


@pytest.fixture
def q_dependent_c(generic):
    """lambda + 3, a c value that depends on q."""
    return lam(generic) + 3
