import logging
from dataclasses import dataclass, field as dataclass_field
from typing import List, Optional

import numpy as np

from .._errors import NotScalar
from .._scalars import Scalar, as_scalar, imaginary_unit, lam, q_int, q_power
from .._verma import HighestWeight, WeightClass, classify_weight, crel_holds, mu_prime
from ._constructors import case_a_mu
from ._representation import Family, Representation, first_nonzero, identity_matrix

logger = logging.getLogger(__name__)


@dataclass
class RelationCheck:
    name: str
    passed: bool
    detail: Optional[str] = None

    def render(self) -> str:
        line = f"{self.name}: {'pass' if self.passed else 'FAIL'}"
        return f"{line} ({self.detail})" if self.detail and not self.passed else line


@dataclass
class RelationReport:
    checks: List[RelationCheck] = dataclass_field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def failed(self) -> List[RelationCheck]:
        return [check for check in self.checks if not check.passed]

    def check(self, name: str) -> RelationCheck:
        for item in self.checks:
            if item.name == name:
                return item
        raise KeyError(name)

    def extend(self, other: "RelationReport") -> "RelationReport":
        return RelationReport(self.checks + other.checks)

    def render(self) -> str:
        return "\n".join(check.render() for check in self.checks)


def _zero_check(name: str, matrix: np.ndarray) -> RelationCheck:
    offending = first_nonzero(matrix)
    if offending is None:
        return RelationCheck(name, True)
    i, j, entry = offending
    logger.warning(f"[verify_relations] {name} fails at entry ({i}, {j})")
    return RelationCheck(name, False, f"first offending entry ({i}, {j}) = {entry}")


def _equal_check(name: str, actual: Scalar, expected: Scalar) -> RelationCheck:
    if actual == expected:
        return RelationCheck(name, True)
    return RelationCheck(name, False, f"got {actual}, expected {expected}")


def verify_relations(rep: Representation) -> RelationReport:
    """
    Check the four defining relations as exact matrix identities:

        XC(a)  q^2 X0 Xp - Xp X0 = q C Xp
        XC(b)  X0 Xm - q^2 Xm X0 = -q C Xm
        XC(c)  Xp Xm - Xm Xp = [2] (C X0 - lambda X0^2)
        XC(d)  C commutes with Xp, Xm, X0
    """
    field = rep.field
    xp, xm, x0, cm = rep.xp, rep.xm, rep.x0, rep.cm
    q1, q2 = q_power(1, field), q_power(2, field)
    two, lam_ = q_int(2, field), lam(field)

    report = RelationReport(
        [
            _zero_check("XC(a)", x0 @ xp * q2 - xp @ x0 - cm @ xp * q1),
            _zero_check("XC(b)", x0 @ xm - xm @ x0 * q2 + cm @ xm * q1),
            _zero_check("XC(c)", xp @ xm - xm @ xp - (cm @ x0 - x0 @ x0 * lam_) * two),
            _zero_check(
                "XC(d)",
                np.concatenate([cm @ xp - xp @ cm, cm @ xm - xm @ cm, cm @ x0 - x0 @ cm], axis=1),
            ),
        ]
    )
    logger.debug(f"[verify_relations] {rep!r}: {'pass' if report.passed else 'FAIL'}")
    return report


def casimir_matrix(rep: Representation) -> np.ndarray:
    """C2 = [2] X0^2 + q Xm Xp + q^-1 Xp Xm."""
    field = rep.field
    return (
        rep.x0 @ rep.x0 * q_int(2, field)
        + rep.xm @ rep.xp * q_power(1, field)
        + rep.xp @ rep.xm * q_power(-1, field)
    )


def _scalar_value(matrix: np.ndarray, rep: Representation, name: str) -> Scalar:
    value = matrix[0, 0]
    offending = first_nonzero(matrix - identity_matrix(rep.dim, rep.field) * value)
    if offending is not None:
        i, j, entry = offending
        raise NotScalar(f"{name} of {rep!r} is not a multiple of the identity; entry ({i}, {j}) = {entry}")
    return value


def casimir_eigenvalue(rep: Representation) -> Scalar:
    """The value of C2 on the representation; raises NotScalar if C2 is not a multiple of the identity."""
    return _scalar_value(casimir_matrix(rep), rep, "C2")


def restricted_identity_residual(rep: Representation) -> np.ndarray:
    """C^2 - 1 - lambda^2/[2] C2, which vanishes on representations of the restricted algebra."""
    field = rep.field
    kappa = lam(field) * lam(field) / q_int(2, field)
    return rep.cm @ rep.cm - identity_matrix(rep.dim, field) - casimir_matrix(rep) * kappa


def scalarity_checks(rep: Representation) -> RelationReport:
    checks = []
    for name, matrix in (("C scalar", rep.cm), ("C2 scalar", casimir_matrix(rep))):
        try:
            _scalar_value(matrix, rep, name)
            checks.append(RelationCheck(name, True))
        except NotScalar as error:
            checks.append(RelationCheck(name, False, str(error)))
    if rep.restricted:
        checks.append(_zero_check("css", restricted_identity_residual(rep)))
    return RelationReport(checks)


def _expected_top_weight(rep: Representation) -> Optional[Scalar]:
    family, field, params = Family(rep.family), rep.field, rep.params
    if family in (Family.LnC, Family.LnCN):
        return case_a_mu(params["n"], params["c"], field)
    if family in (Family.TLnEps, Family.TLnEpsN):
        return q_power(1, field) * q_int(params["n"] - 1, field) / q_int(2, field) * params["eps"]
    if family in (Family.LMu, Family.LLambdaN, Family.TLLambdaN, Family.LMuNtilde):
        return params["mu"]
    if family is Family.TLEpsNtilde:
        return imaginary_unit(field) * q_power(1, field) / lam(field) * params["eps"]
    if family is Family.LPrimenN:
        n, c = params["n"], params["c"]
        return -(q_power(1, field) * q_int(n, field) * q_int(n + 1, field) * c / q_int(2 * n, field))
    return None


def _expected_central(rep: Representation) -> Scalar:
    family, field, params = Family(rep.family), rep.field, rep.params
    if family in (Family.TLnEps, Family.TLnEpsN):
        n = params["n"]
        return q_int(2 * n, field) / (q_int(2, field) * q_int(n, field)) * params["eps"]
    if family is Family.LMu:
        return lam(field) * params["mu"]
    if family in (Family.LMuNtilde, Family.TLEpsNtilde):
        return as_scalar(0, field)
    return params["c"]


def _expected_class(rep: Representation) -> Optional[WeightClass]:
    family = Family(rep.family)
    if family in (Family.LLambdaN, Family.TLLambdaN):
        return WeightClass.ROOT_GENERIC
    if family is Family.LMuNtilde:
        return WeightClass.ROOT_HALF
    return None


def weight_checks(rep: Representation) -> RelationReport:
    """
    Family-specific checks: the highest weight and central value match the family's
    formulas, the top vector is killed by Xp, the bottom by Xm, and the
    submodule weight mu' has its closed form where one exists.
    """
    field, params = rep.field, rep.params
    family = Family(rep.family)
    mu, c = rep.x0[0, 0], rep.cm[0, 0]
    checks = [
        _zero_check("Xp kills w_0", rep.xp[:, :1]),
        _zero_check("Xm kills w_last", rep.xm[:, rep.dim - 1:]),
        _equal_check("central value", c, _expected_central(rep)),
    ]
    expected_mu = _expected_top_weight(rep)
    if expected_mu is not None:
        checks.append(_equal_check("highest weight", mu, expected_mu))

    hw = HighestWeight(mu, c, field)
    if family in (Family.LnC, Family.LnCN):
        n = params["n"]
        expected = -(q_power(1, field) * q_int(n, field) * q_int(n + 1, field) * c / q_int(2 * n, field))
        checks.append(_equal_check("mu prime", mu_prime(n, hw), expected))
    elif family in (Family.TLnEps, Family.TLnEpsN):
        n = params["n"]
        expected = -(q_power(1, field) * q_int(n + 1, field) / q_int(2, field)) * params["eps"]
        checks.append(_equal_check("mu prime", mu_prime(n, hw), expected))

    if rep.restricted:
        checks.append(RelationCheck("restricted weight", crel_holds(mu, c, field)))

    expected_class = _expected_class(rep)
    if expected_class is not None and field.is_root_of_unity:
        label = classify_weight(hw, search_bound=field.N).weight_class
        checks.append(
            RelationCheck("weight class", label is expected_class, f"got {label.value}, expected {expected_class.value}")
        )
    return RelationReport(checks)


def full_report(rep: Representation) -> RelationReport:
    """Relations, scalarity of C and C2, the restricted identity and the family weight checks."""
    return verify_relations(rep).extend(scalarity_checks(rep)).extend(weight_checks(rep))
