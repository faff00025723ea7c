from math import factorial

import pytest

from sl2q._errors import BadLevel, ZeroC
from sl2q._irreps import gram_from_definition, gram_L_n_c, gram_TL_n_eps, lnc_weight, shapovalov_matrix
from sl2q._scalars import FieldSpec, lam, one, q_int, q_power
from sl2q._verma import HighestWeight, restricted_weights

GENERIC = FieldSpec.generic()


@pytest.mark.parametrize("n", range(1, 9))
@pytest.mark.parametrize("c", ["1", "2", "lambda+3"])
def test_closed_form_matches_definition(n, c):
    value = lam(GENERIC) + 3 if c == "lambda+3" else int(c)
    assert gram_L_n_c(n, value) == gram_from_definition(n, lnc_weight(n, value))


@pytest.mark.parametrize("n", range(1, 9))
@pytest.mark.parametrize("eps", [1, -1])
def test_restricted_closed_form_matches_definition(n, eps):
    assert gram_TL_n_eps(n, eps) == gram_from_definition(n, restricted_weights(n, eps, GENERIC))


def test_first_entries():
    gram = gram_L_n_c(2, 3)
    assert gram.entries[0] == one(GENERIC)
    assert gram_TL_n_eps(3, 1).entries[1] == q_int(2, GENERIC) / q_power(1, GENERIC)


@pytest.mark.parametrize("n", range(1, 7))
def test_classical_values(n):
    gram = gram_L_n_c(n, 1)
    for k, entry in enumerate(gram.entries):
        expected = factorial(k) * factorial(n - 1) // factorial(n - 1 - k)
        assert entry.evaluate_numeric(1.0) == pytest.approx(expected)


def test_full_matrix_is_diagonal():
    hw = lnc_weight(4, 2)
    matrix = shapovalov_matrix(4, hw)
    gram = gram_L_n_c(4, 2)
    for j in range(4):
        for k in range(4):
            if j == k:
                assert matrix[j, k] == gram.entries[k]
            else:
                assert matrix[j, k].is_zero()


def test_json_layout():
    document = gram_L_n_c(2, 1).to_json()
    assert list(document) == ["entries"]
    assert len(document["entries"]) == 2


def test_preconditions():
    with pytest.raises(ZeroC):
        gram_L_n_c(3, 0)
    with pytest.raises(BadLevel):
        gram_L_n_c(0, 1)
    with pytest.raises(BadLevel):
        gram_from_definition(2, HighestWeight(1, 3, GENERIC))
    with pytest.raises(ValueError):
        gram_TL_n_eps(2, 0)
