"""
sl2q: exact representations of the quantum algebra sl(2)_q.
This package builds and verifies the finite-dimensional irreducible representations of the
algebra and of its restricted quotient, at generic q and at q = exp(i*pi/N).
"""

__version__ = "0.1.0"

# Import main components for easier access
from ._algebra import AlgebraElement, Generator, Monomial, casimir2, commutator, multiply, normal_form, restricted_reduce
from ._errors import Sl2qError
from ._irreps import (
    Family,
    Representation,
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
    gram_from_definition,
    gram_L_n_c,
    gram_TL_n_eps,
    orthonormal_numeric,
    verify_relations,
)
from ._scalars import FieldSpec, Scalar, q_factorial, q_int
from ._verma import HighestWeight, classify_weight, crel_holds, restricted_weights, rru_weight

__all__ = [
    'AlgebraElement',
    'Generator',
    'Monomial',
    'casimir2',
    'commutator',
    'multiply',
    'normal_form',
    'restricted_reduce',
    'Sl2qError',
    'Family',
    'Representation',
    'build_L_Lambda_N',
    'build_L_mu',
    'build_L_mu_Ntilde',
    'build_L_n_c',
    'build_L_n_c_N',
    'build_L_prime_n_N',
    'build_TL_eps_Ntilde',
    'build_TL_Lambda_N',
    'build_TL_n_eps',
    'casimir_eigenvalue',
    'gram_from_definition',
    'gram_L_n_c',
    'gram_TL_n_eps',
    'orthonormal_numeric',
    'verify_relations',
    'FieldSpec',
    'Scalar',
    'q_factorial',
    'q_int',
    'HighestWeight',
    'classify_weight',
    'crel_holds',
    'restricted_weights',
    'rru_weight',
]
