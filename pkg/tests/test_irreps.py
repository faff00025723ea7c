from fractions import Fraction

import pytest

from sl2q._errors import (
    BadLevel,
    BadParity,
    CrelViolation,
    DivisionByZero,
    NotScalar,
    UnsupportedFamily,
    WeightInSpecialCase,
    ZeroC,
    ZeroMu,
)
from sl2q._irreps import (
    Family,
    build_family,
    build_L_Lambda_N,
    build_L_mu,
    build_L_mu_Ntilde,
    build_L_n_c,
    build_L_n_c_N,
    build_L_prime_n_N,
    build_TL_eps_Ntilde,
    build_TL_Lambda_N,
    build_TL_n_eps,
    casimir_eigenvalue,
    full_report,
    is_zero_matrix,
    restricted_identity_residual,
    verify_relations,
)
from sl2q._scalars import FieldSpec, as_scalar, imaginary_unit, lam, one, q_int, q_power, zero
from sl2q._verma import rru_weight, singular_coefficient

from .conftest import admissible_restricted_weight, admissible_weight, assert_same_matrices

GENERIC = FieldSpec.generic()


def acceptance_grid():
    """(id, builder) pairs covering every family."""
    cells = []
    for n in range(1, 11):
        for c in (1, 2):
            cells.append((f"LnC-{n}-{c}", lambda n=n, c=c: build_L_n_c(n, c)))
    for mu in (0, 1, Fraction(-3, 2)):
        cells.append((f"LMu-{mu}", lambda mu=mu: build_L_mu(mu)))
    for n in range(1, 11):
        for eps in (1, -1):
            cells.append((f"TLnEps-{n}-{eps}", lambda n=n, eps=eps: build_TL_n_eps(n, eps)))
    for N in (3, 4, 5, 6):
        cells.append((f"LLambdaN-{N}", lambda N=N: _l_lambda(N)))
        cells.append((f"TLLambdaN-{N}", lambda N=N: _tl_lambda(N)))
    for N in (3, 5):
        for n in range(1, N):
            cells.append((f"LnCN-{N}-{n}", lambda n=n, N=N: build_L_n_c_N(n, N, 1)))
    for N in (4, 6):
        for mu in (1, 3):
            cells.append((f"LMuNtilde-{N}-{mu}", lambda N=N, mu=mu: build_L_mu_Ntilde(N, mu)))
    for n in range(1, 5):
        cells.append((f"TLnEpsN-5-{n}", lambda n=n: build_TL_n_eps(n, 1, FieldSpec.root_of_unity(5))))
    for N in (4, 8):
        for eps in (1, -1):
            cells.append((f"TLEpsNtilde-{N}-{eps}", lambda N=N, eps=eps: build_TL_eps_Ntilde(N, eps)))
    return cells


def _l_lambda(N):
    hw = admissible_weight(N)
    return build_L_Lambda_N(N, hw.mu, hw.c)


def _tl_lambda(N):
    hw = admissible_restricted_weight(N)
    return build_TL_Lambda_N(N, hw.mu, hw.c)


GRID = acceptance_grid()


@pytest.mark.parametrize("builder", [builder for _, builder in GRID], ids=[name for name, _ in GRID])
def test_every_family_satisfies_its_checks(builder):
    rep = builder()
    report = full_report(rep)
    assert report.passed, report.render()
    if rep.restricted:
        assert report.check("css").passed


class TestLnC:
    def test_one_dimensional(self):
        rep = build_L_n_c(1, 2)
        assert rep.dim == 1
        assert rep.xp[0, 0].is_zero()
        assert rep.x0[0, 0].is_zero()
        assert rep.cm[0, 0] == as_scalar(2, GENERIC)

    def test_two_dimensional(self):
        c = as_scalar(3, GENERIC)
        rep = build_L_n_c(2, c)
        q = q_power(1, GENERIC)
        denominator = q_power(2, GENERIC) + q_power(-2, GENERIC)
        assert rep.x0[0, 0] == c * q / denominator
        assert rep.x0[1, 1] == -(c / q) / denominator
        assert rep.xp[0, 1] == (c * q_int(2, GENERIC) / denominator) ** 2
        assert rep.xm[1, 0] == one(GENERIC)

    def test_q_dependent_central_value(self, q_dependent_c):
        assert full_report(build_L_n_c(4, q_dependent_c)).passed

    def test_preconditions(self):
        with pytest.raises(ZeroC):
            build_L_n_c(3, 0)
        with pytest.raises(BadLevel):
            build_L_n_c(0, 1)
        with pytest.raises(UnsupportedFamily):
            build_L_n_c(2, 1, FieldSpec.root_of_unity(5))

    def test_casimir_value(self):
        rep = build_L_n_c(2, 3)
        mu = rep.x0[0, 0]
        expected = q_int(2, GENERIC) * mu * mu + rep.xp[0, 1] / q_power(1, GENERIC)
        assert casimir_eigenvalue(rep) == expected

    def test_corrupted_entry_breaks_the_commutator(self):
        rep = build_L_n_c(2, 3)
        rep.xp[0, 1] = rep.xp[0, 1] + 1
        report = verify_relations(rep)
        assert report.check("XC(a)").passed
        failure = report.check("XC(c)")
        assert not failure.passed
        assert "offending entry" in failure.detail
        assert not report.passed

    def test_non_scalar_casimir(self):
        rep = build_L_n_c(2, 3)
        rep.xp[0, 1] = rep.xp[0, 1] + 1
        with pytest.raises(NotScalar):
            casimir_eigenvalue(rep)


class TestLMu:
    @pytest.mark.parametrize("mu", [0, 1, Fraction(-3, 2)])
    def test_values(self, mu):
        rep = build_L_mu(mu)
        value = as_scalar(mu, GENERIC)
        assert rep.x0[0, 0] == value
        assert rep.cm[0, 0] == lam(GENERIC) * value
        assert casimir_eigenvalue(rep) == q_int(2, GENERIC) * value * value

    def test_distinct_weights_give_distinct_representations(self):
        assert build_L_mu(1).x0[0, 0] != build_L_mu(2).x0[0, 0]

    def test_root_of_unity(self):
        field = FieldSpec.root_of_unity(4)
        assert full_report(build_L_mu(3, field)).passed


class TestRestrictedGeneric:
    def test_first_values(self):
        assert build_TL_n_eps(1, 1).cm[0, 0] == one(GENERIC)
        assert build_TL_n_eps(1, -1).cm[0, 0] == -one(GENERIC)
        rep = build_TL_n_eps(2, 1)
        assert rep.xp[0, 1] == one(GENERIC)
        assert rep.x0[0, 0] == q_power(1, GENERIC) / q_int(2, GENERIC)

    @pytest.mark.parametrize("n", range(1, 7))
    def test_casimir_value(self, n):
        rep = build_TL_n_eps(n, -1)
        c = rep.cm[0, 0]
        expected = (c * c - 1) * q_int(2, GENERIC) / (lam(GENERIC) * lam(GENERIC))
        assert casimir_eigenvalue(rep) == expected

    @pytest.mark.parametrize("n", [2, 5])
    def test_restricted_identity(self, n):
        assert is_zero_matrix(restricted_identity_residual(build_TL_n_eps(n, 1)))

    def test_signs(self):
        with pytest.raises(ValueError):
            build_TL_n_eps(2, 2)

    def test_root_of_unity_levels(self):
        field = FieldSpec.root_of_unity(4)
        with pytest.raises(DivisionByZero):
            build_TL_n_eps(2, 1, field)
        with pytest.raises(BadLevel):
            build_TL_n_eps(6, 1, FieldSpec.root_of_unity(5))
        rep = build_TL_n_eps(3, 1, field)
        assert rep.family is Family.TLnEpsN
        assert rep.params["N"] == 4


class TestRootOfUnityFamilies:
    @pytest.mark.parametrize("N", [3, 4, 5, 6])
    def test_l_lambda_closes(self, N):
        rep = _l_lambda(N)
        hw = rep.highest_weight()
        assert rep.dim == N
        assert singular_coefficient(N, hw).is_zero()

    def test_special_weights_are_rejected(self):
        with pytest.raises(WeightInSpecialCase):
            build_L_Lambda_N(3, 0, 1)
        with pytest.raises(WeightInSpecialCase):
            build_TL_Lambda_N(3, 0, 1)

    def test_restricted_weight_must_satisfy_relation(self):
        with pytest.raises(CrelViolation):
            build_TL_Lambda_N(4, 1, 3)

    @pytest.mark.parametrize("N", [3, 4, 5])
    def test_tl_lambda_restricted_identity(self, N):
        assert is_zero_matrix(restricted_identity_residual(_tl_lambda(N)))

    def test_lnc_at_root(self):
        rep = build_L_n_c_N(2, 5, 1)
        assert rep.family is Family.LnCN
        with pytest.raises(DivisionByZero):
            build_L_n_c_N(2, 4, 1)
        with pytest.raises(BadLevel):
            build_L_n_c_N(5, 5, 1)
        with pytest.raises(ZeroC):
            build_L_n_c_N(1, 5, 0)

    @pytest.mark.parametrize("n", range(1, 5))
    def test_quotient_matches_complementary_irrep(self, n):
        N = 5
        quotient = build_L_prime_n_N(n, N, 1)
        assert full_report(quotient).passed
        assert_same_matrices(quotient, build_L_n_c_N(N - n, N, 1))

    def test_half_dimensional(self):
        field = FieldSpec.root_of_unity(4)
        rep = build_L_mu_Ntilde(4, 3)
        mu = as_scalar(3, field)
        assert rep.dim == 2
        assert rep.xp[0, 1] == -(lam(field) * q_int(2, field) * mu * mu)
        assert rep.x0[1, 1] == q_power(2, field) * mu
        assert is_zero_matrix(rep.cm)
        with pytest.raises(BadParity):
            build_L_mu_Ntilde(5, 1)
        with pytest.raises(ZeroMu):
            build_L_mu_Ntilde(4, 0)

    @pytest.mark.parametrize("eps", [1, -1])
    def test_restricted_half_dimensional(self, eps):
        field = FieldSpec.root_of_unity(4)
        rep = build_TL_eps_Ntilde(4, eps)
        assert rep.xp[0, 1] == q_power(2, field) * q_int(2, field) / lam(field)
        assert rep.x0[0, 0] == rru_weight(eps, 4).mu
        assert rep.x0[0, 0] == imaginary_unit(field) * q_power(1, field) / lam(field) * eps
        assert is_zero_matrix(rep.cm)
        with pytest.raises(BadParity):
            build_TL_eps_Ntilde(3, eps)


class TestDispatch:
    def test_builds_by_name(self):
        rep = build_family("TLnEpsN", n=2, N=5, eps=-1)
        assert rep.family is Family.TLnEpsN
        assert build_family(Family.LMu, mu=zero(GENERIC)).dim == 1

    def test_missing_parameter(self):
        with pytest.raises(UnsupportedFamily, match="--c"):
            build_family("LnC", n=3)

    def test_unknown_family(self):
        with pytest.raises(ValueError):
            build_family("Lq")
