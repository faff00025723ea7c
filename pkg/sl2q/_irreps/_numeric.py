"""
Floating-point views of exact representations: plain evaluation at a value of q, and the
orthonormal basis u_k = w_k/|w_k| obtained from the Shapovalov form for real q.
"""

import logging
from dataclasses import dataclass
from typing import Dict, Optional

import numpy as np

from ..constants import SIGNIFICANT_DIGITS, TOLERANCE
from .._errors import NonUnitarizable, PreconditionError, UnsupportedFamily
from ._representation import MATRIX_NAMES, Family, Representation

logger = logging.getLogger(__name__)

ORTHONORMAL_FAMILIES = (Family.LnC, Family.TLnEps)


@dataclass
class NumericRep:
    family: Family
    q_value: complex
    c_value: complex
    xp: np.ndarray
    xm: np.ndarray
    x0: np.ndarray
    cm: np.ndarray
    orthonormal: bool = False
    unitary: bool = False

    def matrices(self) -> Dict[str, np.ndarray]:
        return dict(zip(MATRIX_NAMES, (self.xp, self.xm, self.x0, self.cm)))


def evaluate_matrix(matrix: np.ndarray, q_value=None) -> np.ndarray:
    rows, cols = matrix.shape
    result = np.zeros((rows, cols), dtype=complex)
    for i in range(rows):
        for j in range(cols):
            result[i, j] = matrix[i, j].evaluate_numeric(q_value)
    return result


def evaluate_representation(rep: Representation, q_value=None) -> NumericRep:
    """
    Evaluate every matrix at ``q_value``. Root-of-unity representations are always
    evaluated at q = exp(i*pi/N), so ``q_value`` may be omitted for them.
    """
    if q_value is None and not rep.field.is_root_of_unity:
        raise PreconditionError(f"A q value is needed to evaluate {rep!r}")
    xp, xm, x0, cm = (evaluate_matrix(m, q_value) for m in (rep.xp, rep.xm, rep.x0, rep.cm))
    q_used = complex(q_value) if q_value is not None else np.exp(1j * np.pi / rep.field.N)
    return NumericRep(Family(rep.family), q_used, cm[0, 0], xp, xm, x0, cm)


def orthonormal_numeric(rep: Representation, q_value: float, c_value: Optional[float] = None) -> NumericRep:
    """
    Matrices in the orthonormal basis u_k = w_k/|w_k|, |w_k| the positive root of the Gram entry.

    Consecutive Gram entries satisfy (w_k, w_k) = Xp[k-1, k] (w_{k-1}, w_{k-1}), so the norms
    are accumulated from the evaluated superdiagonal one factor at a time.

    Args:
        rep (Representation): An LnC or TLnEps representation
        q_value (float): Real deformation parameter
        c_value (float): Optional value of c; must agree with the representation's

    Returns:
        NumericRep: The rescaled matrices, with ``unitary`` set only for q > 0 and c > 0

    Raises:
        NonUnitarizable: If a Gram entry is not positive at this q
    """
    family = Family(rep.family)
    if family not in ORTHONORMAL_FAMILIES:
        raise UnsupportedFamily(f"Orthonormal bases are built for LnC and TLnEps only, not {family.value}")
    if isinstance(q_value, complex) and abs(q_value.imag) > TOLERANCE:
        raise PreconditionError(f"Orthonormal bases need a real q, got {q_value}")
    q_value = float(np.real(q_value))

    c_exact = rep.cm[0, 0].evaluate_numeric(q_value)
    if c_value is not None and abs(c_exact - c_value) > TOLERANCE * max(1.0, abs(c_value)):
        raise PreconditionError(f"c_value={c_value} does not match the representation's c = {c_exact}")

    xp, xm, x0, cm = (evaluate_matrix(m, q_value) for m in (rep.xp, rep.xm, rep.x0, rep.cm))
    ratios = np.array([xp[k - 1, k] for k in range(1, rep.dim)], dtype=complex)
    if np.any(np.abs(ratios.imag) > TOLERANCE) or np.any(ratios.real <= TOLERANCE):
        raise NonUnitarizable(f"{rep!r} has a non-positive Shapovalov entry at q={q_value}: {ratios.real}")

    norms = np.concatenate(([1.0], np.cumprod(np.sqrt(ratios.real))))
    scale, unscale = np.diag(norms), np.diag(1.0 / norms)
    xp, xm, x0, cm = (scale @ m @ unscale for m in (xp, xm, x0, cm))

    unitary = q_value > 0 and abs(np.imag(c_exact)) <= TOLERANCE and np.real(c_exact) > 0
    if not unitary:
        logger.warning(f"[orthonormal_numeric] q={q_value}, c={c_exact} is outside q, c > 0; flagged non-unitary")
    logger.debug(f"[orthonormal_numeric] {family.value} dim={rep.dim} q={q_value}")
    return NumericRep(family, complex(q_value), c_exact, xp, xm, x0, cm, orthonormal=True, unitary=bool(unitary))


def adjoint_residual(numeric: NumericRep) -> float:
    """max |Xp - Xm^dagger|."""
    return float(np.max(np.abs(numeric.xp - numeric.xm.conj().T)))


def classical_residuals(numeric: NumericRep) -> Dict[str, float]:
    """Max-norm distance of the commutators from the classical sl(2) relations."""
    xp, xm, x0 = numeric.xp, numeric.xm, numeric.x0

    def norm(matrix):
        return float(np.max(np.abs(matrix))) if matrix.size else 0.0

    return {
        "[X0,Xp]-Xp": norm(x0 @ xp - xp @ x0 - xp),
        "[X0,Xm]+Xm": norm(x0 @ xm - xm @ x0 + xm),
        "[Xp,Xm]-2X0": norm(xp @ xm - xm @ xp - 2 * x0),
    }


def encode_complex(value: complex) -> list:
    digits = f".{SIGNIFICANT_DIGITS}g"
    return [float(format(value.real, digits)), float(format(value.imag, digits))]


def numeric_to_json(numeric: NumericRep) -> dict:
    document = {
        "family": numeric.family.value,
        "q": encode_complex(numeric.q_value),
        "c": encode_complex(numeric.c_value),
        "orthonormal": numeric.orthonormal,
        "matrices": {
            name: [[encode_complex(complex(v)) for v in row] for row in matrix]
            for name, matrix in numeric.matrices().items()
        },
        "classical_residuals": classical_residuals(numeric),
    }
    if numeric.orthonormal:
        document["unitary"] = numeric.unitary
        document["adjoint_residual"] = adjoint_residual(numeric)
        document["x0_imaginary"] = float(np.max(np.abs(numeric.x0.imag)))
    return document
