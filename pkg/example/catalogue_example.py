import logging

from sl2q import FieldSpec, HighestWeight, classify_weight
from sl2q._algebra import parse_word, word_normal_form
from sl2q._irreps import (
    build_L_mu_Ntilde,
    build_L_n_c,
    build_TL_n_eps,
    casimir_eigenvalue,
    full_report,
    gram_L_n_c,
    orthonormal_numeric,
    adjoint_residual,
    representation_to_json,
)
from sl2q._verma import embedding_chain, render_chain

logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)

generic = FieldSpec.generic()

# PBW normal form of a short word
for monomial, coefficient in word_normal_form(parse_word("Xp Xm"), generic):
    print(f"  {coefficient.render()} * {monomial.render()}")

# 3-dimensional irrep with central value 2
rep = build_L_n_c(3, 2)
print(full_report(rep).render())
print("casimir:", casimir_eigenvalue(rep).render())
print("gram:", [entry.render() for entry in gram_L_n_c(3, 2).entries])

numeric = orthonormal_numeric(rep, 1.1)
print("adjoint residual at q=1.1:", adjoint_residual(numeric))

# restricted quotient
print(full_report(build_TL_n_eps(4, -1)).render())

# half-dimensional irrep at q = exp(i pi / 4)
print(representation_to_json(build_L_mu_Ntilde(4, 3)))

# classify a weight and draw its submodule chain
classification = classify_weight(HighestWeight(0, 1, generic))
print(classification.label, classification.level_numbers())
print(render_chain(embedding_chain(classification)))

root5 = FieldSpec.root_of_unity(5)
classification = classify_weight(HighestWeight(0, 1, root5), search_bound=15)
print(classification.label, classification.level_numbers())
print(render_chain(embedding_chain(classification)))
