from fractions import Fraction

import numpy as np
import pytest

from sl2q._errors import NonUnitarizable, PreconditionError, UnsupportedFamily
from sl2q._irreps import (
    adjoint_residual,
    build_L_mu,
    build_L_mu_Ntilde,
    build_L_n_c,
    build_TL_n_eps,
    classical_residuals,
    evaluate_representation,
    gram_L_n_c,
    numeric_to_json,
    orthonormal_numeric,
)
from sl2q._scalars import FieldSpec, parse_scalar

Q = 1.1


@pytest.mark.parametrize("n", range(2, 11))
def test_orthonormal_basis_is_unitary(n):
    numeric = orthonormal_numeric(build_L_n_c(n, Fraction(3, 2)), Q, 1.5)
    assert numeric.unitary
    assert adjoint_residual(numeric) < 1e-12
    assert np.max(np.abs(numeric.x0.imag)) < 1e-12


def test_norms_follow_the_gram_entries():
    rep = build_L_n_c(5, Fraction(3, 2))
    numeric = orthonormal_numeric(rep, Q)
    gram = [entry.evaluate_numeric(Q).real for entry in gram_L_n_c(5, Fraction(3, 2)).entries]
    for k in range(1, 5):
        assert numeric.xm[k, k - 1].real == pytest.approx(np.sqrt(gram[k] / gram[k - 1]), rel=1e-6)


@pytest.mark.parametrize("c", [-2, Fraction(-1, 3)])
def test_negative_central_value_is_flagged(c):
    numeric = orthonormal_numeric(build_L_n_c(4, c), Q)
    assert not numeric.unitary
    assert adjoint_residual(numeric) < 1e-12
    assert numeric_to_json(numeric)["unitary"] is False


@pytest.mark.parametrize("n", [2, 4])
def test_restricted_orthonormal_basis(n):
    numeric = orthonormal_numeric(build_TL_n_eps(n, 1), Q)
    assert adjoint_residual(numeric) < 1e-12


def test_two_dimensional_entry():
    numeric = orthonormal_numeric(build_L_n_c(2, parse_scalar("3/2", FieldSpec.generic())), Q)
    expected = 1.5 * (Q + 1 / Q) / (Q ** 2 + Q ** -2)
    assert numeric.xp[0, 1].real == pytest.approx(expected)


@pytest.mark.parametrize("orthonormal", [False, True])
def test_classical_limit(orthonormal):
    rep = build_L_n_c(3, 1)
    q_value = 1 + 1e-6
    numeric = orthonormal_numeric(rep, q_value) if orthonormal else evaluate_representation(rep, q_value)
    assert all(residual < 1e-4 for residual in classical_residuals(numeric).values())


def test_classical_weights():
    numeric = evaluate_representation(build_L_n_c(4, 1), 1 + 1e-9)
    assert np.diag(numeric.x0).real == pytest.approx([1.5, 0.5, -0.5, -1.5], abs=1e-6)


def test_root_of_unity_needs_no_q():
    numeric = evaluate_representation(build_L_mu_Ntilde(4, 1))
    assert numeric.q_value == pytest.approx(np.exp(1j * np.pi / 4))
    assert numeric.xp.shape == (2, 2)


def test_generic_needs_q():
    with pytest.raises(PreconditionError):
        evaluate_representation(build_L_mu(1))


def test_orthonormal_preconditions():
    with pytest.raises(UnsupportedFamily):
        orthonormal_numeric(build_L_mu(1), Q)
    with pytest.raises(PreconditionError):
        orthonormal_numeric(build_L_n_c(2, 1), Q, c_value=2.0)
    with pytest.raises(PreconditionError):
        orthonormal_numeric(build_L_n_c(2, 1), complex(1.0, 0.5))


def test_vanishing_norm_is_not_unitarizable():
    c = parse_scalar("q-1", FieldSpec.generic())
    with pytest.raises(NonUnitarizable):
        orthonormal_numeric(build_L_n_c(3, c), 1.0)


def test_json_document():
    document = numeric_to_json(orthonormal_numeric(build_L_n_c(3, 2), Q))
    assert document["orthonormal"] is True
    assert document["unitary"] is True
    assert document["adjoint_residual"] < 1e-12
    assert document["family"] == "LnC"
    assert len(document["matrices"]["Xp"]) == 3
    assert set(document["classical_residuals"]) == {"[X0,Xp]-Xp", "[X0,Xm]+Xm", "[Xp,Xm]-2X0"}
