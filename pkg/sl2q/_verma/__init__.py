from ._action import (
    apply_element,
    apply_word,
    mu_prime,
    raising_coefficient,
    singular_coefficient,
    verma_action,
    weight_at,
)
from ._chain import chain_to_dot, embedding_chain, render_chain
from ._classification import (
    Classification,
    LevelKind,
    SingularLevel,
    WeightClass,
    classify_weight,
    satisfies_case_a,
    satisfies_case_b,
)
from ._weights import (
    HighestWeight,
    crel_holds,
    crel_residual,
    restricted_generic_weight,
    restricted_mu_prime,
    restricted_weights,
    rru_weight,
)

__all__ = [
    'HighestWeight',
    'Classification',
    'LevelKind',
    'SingularLevel',
    'WeightClass',
    'apply_element',
    'apply_word',
    'chain_to_dot',
    'classify_weight',
    'crel_holds',
    'crel_residual',
    'embedding_chain',
    'mu_prime',
    'raising_coefficient',
    'render_chain',
    'restricted_generic_weight',
    'restricted_mu_prime',
    'restricted_weights',
    'rru_weight',
    'satisfies_case_a',
    'satisfies_case_b',
    'singular_coefficient',
    'verma_action',
    'weight_at',
]
