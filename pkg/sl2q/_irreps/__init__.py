from ._constructors import (
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
    case_a_mu,
)
from ._forms import (
    GramForm,
    gram_from_definition,
    gram_L_n_c,
    gram_TL_n_eps,
    lnc_weight,
    shapovalov_matrix,
)
from ._numeric import (
    NumericRep,
    adjoint_residual,
    classical_residuals,
    evaluate_matrix,
    evaluate_representation,
    numeric_to_json,
    orthonormal_numeric,
)
from ._representation import Family, Representation, first_nonzero, is_zero_matrix
from ._serialization import (
    gram_to_json,
    representation_from_json,
    representation_to_dict,
    representation_to_json,
)
from ._verification import (
    RelationCheck,
    RelationReport,
    casimir_eigenvalue,
    casimir_matrix,
    full_report,
    restricted_identity_residual,
    scalarity_checks,
    verify_relations,
    weight_checks,
)

__all__ = [
    'Family',
    'Representation',
    'GramForm',
    'NumericRep',
    'RelationCheck',
    'RelationReport',
    'adjoint_residual',
    'build_family',
    'build_L_Lambda_N',
    'build_L_mu',
    'build_L_mu_Ntilde',
    'build_L_n_c',
    'build_L_n_c_N',
    'build_L_prime_n_N',
    'build_TL_eps_Ntilde',
    'build_TL_Lambda_N',
    'build_TL_n_eps',
    'case_a_mu',
    'casimir_eigenvalue',
    'casimir_matrix',
    'classical_residuals',
    'evaluate_matrix',
    'evaluate_representation',
    'first_nonzero',
    'full_report',
    'gram_from_definition',
    'gram_L_n_c',
    'gram_TL_n_eps',
    'gram_to_json',
    'is_zero_matrix',
    'lnc_weight',
    'numeric_to_json',
    'orthonormal_numeric',
    'representation_from_json',
    'representation_to_dict',
    'representation_to_json',
    'restricted_identity_residual',
    'scalarity_checks',
    'shapovalov_matrix',
    'verify_relations',
    'weight_checks',
]
