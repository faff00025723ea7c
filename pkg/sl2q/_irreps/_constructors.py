"""
Matrix constructors for every irrep family.

Families whose rules are closed forms (LnC, LnCN, TLnEps, LMuNtilde, TLEpsNtilde) are
built from those forms; the root-of-unity families parametrized by a free weight
(LLambdaN, TLLambdaN) and the quotient L'_{n,N} are truncations of the Verma action.
"""

import logging
from typing import Optional

from .._errors import (
    BadLevel,
    BadParity,
    DivisionByZero,
    UnsupportedFamily,
    WeightInSpecialCase,
    ZeroC,
    ZeroMu,
)
from .._scalars import FieldSpec, as_scalar, imaginary_unit, lam, q_int, q_power, zero
from .._verma import HighestWeight, WeightClass, classify_weight, mu_prime
from ._representation import (
    Family,
    Representation,
    diagonal_matrix,
    lowering_matrix,
    raising_matrix,
    truncated_verma,
)

logger = logging.getLogger(__name__)

# where a weight rejected by the free-weight families belongs instead
_REDIRECT = {
    WeightClass.ROOT_A: "it has a singular vector below N; use LnCN (or TLnEpsN when restricted)",
    WeightClass.ROOT_B: "it satisfies c = lambda mu; use LMu",
    WeightClass.ROOT_HALF: "c = 0 at even N; use LMuNtilde (or TLEpsNtilde when restricted)",
}


def _check_sign(eps: int):
    if eps not in (1, -1):
        raise ValueError(f"eps must be +1 or -1, got {eps}")


def _check_even(N: int):
    if N % 2:
        raise BadParity(f"N must be even for the half-period families, got N={N}")


def case_a_mu(n: int, c, field: FieldSpec):
    """mu = q [n][n-1] c/[2n], the weight with a singular vector at level n."""
    q2n = q_int(2 * n, field)
    if q2n.is_zero():
        raise DivisionByZero(f"[2n] vanishes for n={n} in {field}; n = N/2 is forbidden at even N, see the half-periodic family")
    return q_power(1, field) * q_int(n, field) * q_int(n - 1, field) * as_scalar(c, field) / q2n


def _lnc_matrices(n: int, c, field: FieldSpec, family: Family, params: dict) -> Representation:
    c = as_scalar(c, field)
    q2n = q_int(2 * n, field)
    if q2n.is_zero():
        raise DivisionByZero(f"[2n] vanishes for n={n} in {field}; n = N/2 is forbidden at even N, see the half-periodic family")
    qn = q_int(n, field)
    ratio = c * q_int(2, field) * qn / q2n
    ratio2 = ratio * ratio
    xp = raising_matrix(
        (q_power(2 * k - n, field) * q_int(k, field) * q_int(n - k, field) * ratio2 for k in range(1, n)),
        field,
    )
    x0 = diagonal_matrix(
        (
            c * q_power(k, field) * qn / q2n * (q_int(n - k, field) - q_power(1 - n, field) * q_int(k + 1, field))
            for k in range(n)
        ),
        field,
    )
    rep = Representation(
        family=family,
        field=field,
        dim=n,
        xp=xp,
        xm=lowering_matrix(n, field),
        x0=x0,
        cm=diagonal_matrix((c for _ in range(n)), field),
        params=params,
    )
    logger.debug(f"[_lnc_matrices] {family.value} n={n} over {field}")
    return rep


def build_L_n_c(n: int, c, field: Optional[FieldSpec] = None) -> Representation:
    """
    The n-dimensional irrep L_{n,c} at generic q.

    Args:
        n (int): Dimension, n >= 1
        c: Nonzero value of the central element C
        field (FieldSpec): Must be generic; use ``build_L_n_c_N`` at a root of unity

    Returns:
        Representation: Matrices in the basis w_k = Xm^k |n,c>
    """
    field = field or FieldSpec.generic()
    if field.is_root_of_unity:
        raise UnsupportedFamily(f"LnC is the generic-q family; use LnCN over {field}")
    if n < 1:
        raise BadLevel(f"n must be >= 1, got {n}")
    c = as_scalar(c, field)
    if c.is_zero():
        raise ZeroC("LnC needs c != 0; the weight mu = c = 0 belongs to LMu")
    return _lnc_matrices(n, c, field, Family.LnC, {"n": n, "c": c})


def build_L_mu(mu, field: Optional[FieldSpec] = None) -> Representation:
    """One-dimensional irrep with X0 = mu, C = lambda mu, X+- = 0. Any field."""
    if field is None:
        field = getattr(mu, "field", None) or FieldSpec.generic()
    mu = as_scalar(mu, field)
    return Representation(
        family=Family.LMu,
        field=field,
        dim=1,
        xp=diagonal_matrix([zero(field)], field),
        xm=diagonal_matrix([zero(field)], field),
        x0=diagonal_matrix([mu], field),
        cm=diagonal_matrix([lam(field) * mu], field),
        params={"mu": mu},
    )


def build_TL_n_eps(n: int, eps: int, field: Optional[FieldSpec] = None) -> Representation:
    """
    The n-dimensional irrep of the restricted algebra with C = eps [2n]/([2][n]).

    At a root of unity the same rules give the family TLnEpsN for n < N, n != N/2.
    """
    _check_sign(eps)
    field = field or FieldSpec.generic()
    if n < 1:
        raise BadLevel(f"n must be >= 1, got {n}")
    q2n = q_int(2 * n, field)
    if q2n.is_zero():
        raise DivisionByZero(f"[2n] vanishes for n={n} in {field}; n = N/2 and n = N are excluded")
    if field.is_root_of_unity and n >= field.N:
        raise BadLevel(f"n must be < N={field.N}, got {n}")
    two, qn = q_int(2, field), q_int(n, field)
    c = q2n / (two * qn) * eps
    xp = raising_matrix(
        (q_power(2 * k - n, field) * q_int(k, field) * q_int(n - k, field) for k in range(1, n)),
        field,
    )
    x0 = diagonal_matrix(
        (
            q_power(k, field) / two * (q_int(n - k, field) - q_power(1 - n, field) * q_int(k + 1, field)) * eps
            for k in range(n)
        ),
        field,
    )
    family = Family.TLnEpsN if field.is_root_of_unity else Family.TLnEps
    params = {"n": n, "eps": eps}
    if field.is_root_of_unity:
        params["N"] = field.N
    logger.debug(f"[build_TL_n_eps] {family.value} n={n} eps={eps} over {field}")
    return Representation(
        family=family,
        field=field,
        dim=n,
        xp=xp,
        xm=lowering_matrix(n, field),
        x0=x0,
        cm=diagonal_matrix((c for _ in range(n)), field),
        params=params,
    )


def _require_root_generic(hw: HighestWeight, family: Family):
    classification = classify_weight(hw, search_bound=hw.field.N)
    if classification.weight_class is not WeightClass.ROOT_GENERIC:
        hint = _REDIRECT.get(classification.weight_class, "")
        raise WeightInSpecialCase(
            f"{family.value} needs a weight with no special singular vectors; "
            f"{hw.render()} is {classification.label}: {hint}"
        )


def build_L_Lambda_N(N: int, mu, c) -> Representation:
    """The N-dimensional irrep L_{Lambda,N} for a weight outside every special case."""
    field = FieldSpec.root_of_unity(N)
    hw = HighestWeight(mu, c, field)
    _require_root_generic(hw, Family.LLambdaN)
    return truncated_verma(hw, N, Family.LLambdaN, {"N": N, "mu": hw.mu, "c": hw.c})


def _check_root_level(n: int, N: int):
    if n < 1 or n >= N:
        raise BadLevel(f"n must satisfy 1 <= n < N={N}, got {n}")


def build_L_n_c_N(n: int, N: int, c) -> Representation:
    """The n-dimensional irrep L_{n,N} at q = exp(i*pi/N), same rules as L_{n,c}."""
    _check_root_level(n, N)
    field = FieldSpec.root_of_unity(N)
    c = as_scalar(c, field)
    if c.is_zero():
        raise ZeroC("LnCN needs c != 0")
    return _lnc_matrices(n, c, field, Family.LnCN, {"n": n, "N": N, "c": c})


def build_L_prime_n_N(n: int, N: int, c) -> Representation:
    """
    The (N-n)-dimensional quotient L'_{n,N}: the Verma action at the submodule weight
    (mu', c) truncated to N-n vectors. It coincides with L_{N-n,N}.
    """
    _check_root_level(n, N)
    field = FieldSpec.root_of_unity(N)
    c = as_scalar(c, field)
    if c.is_zero():
        raise ZeroC("L'_{n,N} needs c != 0")
    hw = HighestWeight(case_a_mu(n, c, field), c, field)
    submodule = HighestWeight(mu_prime(n, hw), c, field)
    return truncated_verma(submodule, N - n, Family.LPrimenN, {"n": n, "N": N, "c": c})


def build_L_mu_Ntilde(N: int, mu) -> Representation:
    """The N/2-dimensional irrep at c = 0, even N, mu != 0."""
    _check_even(N)
    field = FieldSpec.root_of_unity(N)
    mu = as_scalar(mu, field)
    if mu.is_zero():
        raise ZeroMu("LMuNtilde needs mu != 0; mu = c = 0 belongs to LMu")
    half = N // 2
    mu2 = mu * mu
    xp = raising_matrix(
        (-(q_power(2 * k - 2, field) * lam(field) * q_int(2 * k, field) * mu2) for k in range(1, half)),
        field,
    )
    return Representation(
        family=Family.LMuNtilde,
        field=field,
        dim=half,
        xp=xp,
        xm=lowering_matrix(half, field),
        x0=diagonal_matrix((q_power(2 * k, field) * mu for k in range(half)), field),
        cm=diagonal_matrix((zero(field) for _ in range(half)), field),
        params={"N": N, "mu": mu},
    )


def build_TL_Lambda_N(N: int, mu, c) -> Representation:
    """N-dimensional irrep of the restricted algebra; (mu, c) must satisfy the restriction relation."""
    field = FieldSpec.root_of_unity(N)
    hw = HighestWeight(mu, c, field, restricted=True)
    _require_root_generic(hw, Family.TLLambdaN)
    return truncated_verma(hw, N, Family.TLLambdaN, {"N": N, "mu": hw.mu, "c": hw.c})


def build_TL_eps_Ntilde(N: int, eps: int) -> Representation:
    """N/2-dimensional restricted irrep at c = 0 with mu = eps i q/lambda."""
    _check_sign(eps)
    _check_even(N)
    field = FieldSpec.root_of_unity(N)
    half = N // 2
    inv_lam = lam(field).inv()
    i = imaginary_unit(field)
    xp = raising_matrix(
        (q_power(2 * k, field) * q_int(2 * k, field) * inv_lam for k in range(1, half)),
        field,
    )
    x0 = diagonal_matrix((i * q_power(2 * k + 1, field) * inv_lam * eps for k in range(half)), field)
    return Representation(
        family=Family.TLEpsNtilde,
        field=field,
        dim=half,
        xp=xp,
        xm=lowering_matrix(half, field),
        x0=x0,
        cm=diagonal_matrix((zero(field) for _ in range(half)), field),
        params={"N": N, "eps": eps},
    )


def _require(value, name: str, family: Family):
    if value is None:
        raise UnsupportedFamily(f"{family.value} needs --{name}")
    return value


def build_family(family, n=None, N=None, c=None, mu=None, eps=None) -> Representation:
    """Dispatch on the family name with the family's own parameter list."""
    family = Family(family)
    if family is Family.LnC:
        return build_L_n_c(_require(n, "n", family), _require(c, "c", family))
    if family is Family.LMu:
        field = FieldSpec.root_of_unity(N) if N is not None else FieldSpec.generic()
        return build_L_mu(_require(mu, "mu", family), field)
    if family is Family.LLambdaN:
        return build_L_Lambda_N(_require(N, "N", family), _require(mu, "mu", family), _require(c, "c", family))
    if family is Family.LnCN:
        return build_L_n_c_N(_require(n, "n", family), _require(N, "N", family), _require(c, "c", family))
    if family is Family.LPrimenN:
        return build_L_prime_n_N(_require(n, "n", family), _require(N, "N", family), _require(c, "c", family))
    if family is Family.LMuNtilde:
        return build_L_mu_Ntilde(_require(N, "N", family), _require(mu, "mu", family))
    if family is Family.TLnEps:
        return build_TL_n_eps(_require(n, "n", family), _require(eps, "eps", family))
    if family is Family.TLnEpsN:
        N = _require(N, "N", family)
        return build_TL_n_eps(_require(n, "n", family), _require(eps, "eps", family), FieldSpec.root_of_unity(N))
    if family is Family.TLLambdaN:
        return build_TL_Lambda_N(_require(N, "N", family), _require(mu, "mu", family), _require(c, "c", family))
    return build_TL_eps_Ntilde(_require(N, "N", family), _require(eps, "eps", family))
