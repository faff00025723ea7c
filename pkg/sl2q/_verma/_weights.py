import logging
from dataclasses import dataclass
from fractions import Fraction

from .._errors import BadParity, CrelViolation, DivisionByZero, FieldMismatch
from .._scalars import FieldSpec, Scalar, as_scalar, imaginary_unit, lam, q_int, q_power

logger = logging.getLogger(__name__)


def _check_sign(eps: int):
    if eps not in (1, -1):
        raise ValueError(f"eps must be +1 or -1, got {eps}")


@dataclass(frozen=True)
class HighestWeight:
    """
    The pair (mu, c): eigenvalues of X0 and C on the highest-weight vector.

    Restricted weights must satisfy c^2 = 1 + lambda^2 (mu^2/q^2 + c mu/q).
    """

    mu: Scalar
    c: Scalar
    field: FieldSpec
    restricted: bool = False

    def __post_init__(self):
        object.__setattr__(self, "mu", as_scalar(self.mu, self.field))
        object.__setattr__(self, "c", as_scalar(self.c, self.field))
        if self.restricted and not crel_holds(self.mu, self.c, self.field):
            raise CrelViolation(
                f"(mu, c) = ({self.mu.render()}, {self.c.render()}) violates c^2 = 1 + lambda^2(mu^2/q^2 + c mu/q)"
            )

    def with_mu(self, mu: Scalar) -> "HighestWeight":
        """Same central value c, shifted X0 eigenvalue; used for submodule highest weights."""
        return HighestWeight(mu, self.c, self.field, False)

    def render(self) -> str:
        return f"(mu={self.mu.render()}, c={self.c.render()}, field={self.field})"


def crel_residual(mu, c, field: FieldSpec) -> Scalar:
    mu = as_scalar(mu, field)
    c = as_scalar(c, field)
    lam2 = lam(field) * lam(field)
    return c * c - 1 - lam2 * (mu * mu * q_power(-2, field) + c * mu * q_power(-1, field))


def crel_holds(mu, c, field: FieldSpec) -> bool:
    """Exact test of c^2 = 1 + lambda^2 (mu^2/q^2 + c mu/q)."""
    if isinstance(mu, Scalar) and mu.field != field or isinstance(c, Scalar) and c.field != field:
        raise FieldMismatch(f"Weight scalars must live in {field}")
    return crel_residual(mu, c, field).is_zero()


def restricted_weights(n: int, eps: int, field: FieldSpec) -> HighestWeight:
    """
    The restricted weight with a singular vector at level n:
    c = eps [2n]/([2][n]), mu = eps q [n-1]/[2].
    """
    _check_sign(eps)
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    two, qn, q2n = q_int(2, field), q_int(n, field), q_int(2 * n, field)
    if q2n.is_zero() or two.is_zero():
        raise DivisionByZero(f"[2n] or [2] vanishes for n={n} in {field}; n = N/2 and multiples of N are excluded")
    c = q2n / (two * qn) * eps
    mu = q_power(1, field) * q_int(n - 1, field) / two * eps
    logger.debug(f"[restricted_weights] n={n}, eps={eps}: mu={mu.render()}, c={c.render()}")
    return HighestWeight(mu, c, field, restricted=True)


def restricted_mu_prime(n: int, eps: int, field: FieldSpec) -> Scalar:
    """Submodule weight -eps q [n+1]/[2] for the restricted weight at level n."""
    _check_sign(eps)
    return -(q_power(1, field) * q_int(n + 1, field) / q_int(2, field)) * eps


def rru_weight(eps: int, N: int) -> HighestWeight:
    """Weight (mu, 0) with mu = eps i q/lambda, so mu^2 = -q^2/lambda^2, at q = exp(i*pi/N)."""
    _check_sign(eps)
    if N % 2:
        raise BadParity(f"N must be even for the c = 0 restricted weight, got N={N}")
    field = FieldSpec.root_of_unity(N)
    mu = imaginary_unit(field) * q_power(1, field) / lam(field) * eps
    return HighestWeight(mu, as_scalar(0, field), field, restricted=True)


def restricted_generic_weight(u, field: FieldSpec) -> HighestWeight:
    """
    A rational family of restricted weights parametrized by u != 0.

    With t = 2/u - u/2 and s = 2/u + u/2 (so s^2 - t^2 = 4), the pair
    mu = t q/(lambda [2]), c = (lambda t/[2] + s)/2 solves the restriction relation.
    u = 2 gives (mu, c) = (0, 1).
    """
    u = Fraction(u)
    if u == 0:
        raise ValueError("u must be nonzero")
    two = q_int(2, field)
    if two.is_zero():
        raise DivisionByZero(f"[2] vanishes in {field}")
    t = 2 / u - u / 2
    s = 2 / u + u / 2
    mu = q_power(1, field) * t / (lam(field) * two)
    c = (lam(field) * t / two + s) / 2
    return HighestWeight(mu, c, field, restricted=True)
