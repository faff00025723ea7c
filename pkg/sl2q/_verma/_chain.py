import logging

import networkx as nx

from ._classification import Classification, LevelKind, WeightClass

logger = logging.getLogger(__name__)

_SUBSCRIPTS = str.maketrans("0123456789", "₀₁₂₃₄₅₆₇₈₉")

# classes whose chain of submodules continues past any search bound
_UNBOUNDED = {
    WeightClass.REDUCIBLE_B,
    WeightClass.ROOT_B,
    WeightClass.ROOT_A,
    WeightClass.ROOT_GENERIC,
    WeightClass.ROOT_HALF,
}


def _sub(index: int) -> str:
    return str(index).translate(_SUBSCRIPTS)


def _module_name(level, classification: Classification) -> str:
    if level.kind is LevelKind.PERIODIC:
        return f"Ṽ{_sub(level.p)}"
    if level.kind is LevelKind.HALF_PERIODIC:
        return f"V̂{_sub(level.p)}"
    if level.kind is LevelKind.CASE_B:
        return f"V{_sub(level.n)}"
    if level.p is not None:
        return f"Ṽ′{_sub(level.p)}"
    return "V^Λ′"


def _top_alias(classification: Classification) -> str:
    if classification.weight_class in (WeightClass.ROOT_A, WeightClass.ROOT_GENERIC):
        return "Ṽ₀"
    if classification.weight_class is WeightClass.ROOT_HALF:
        return "V̂₀"
    return ""


def embedding_chain(classification: Classification) -> nx.DiGraph:
    """
    The chain of Verma submodules generated by the singular vectors found during classification.

    Node ``level_m`` is the submodule generated by Xm^m v_0 (``level_0`` is the whole module);
    each edge points from a module to the next one it contains.
    """
    graph = nx.DiGraph(
        weight_class=classification.label,
        unbounded=classification.weight_class in _UNBOUNDED,
    )
    graph.add_node("level_0", label="V^Λ", level=0, mu_prime=classification.hw.mu.render())
    alias = _top_alias(classification)
    if alias:
        graph.nodes["level_0"]["alias"] = alias

    previous = "level_0"
    for level in classification.levels:
        node = f"level_{level.n}"
        graph.add_node(
            node,
            label=_module_name(level, classification),
            level=level.n,
            kind=level.label,
            mu_prime=level.mu_prime.render(),
        )
        graph.add_edge(previous, node, singular_vector=f"Xm^{level.n} v0")
        previous = node

    logger.debug(f"[embedding_chain] {graph.number_of_nodes()} modules for {classification.label}")
    return graph


def render_chain(graph: nx.DiGraph) -> str:
    """Text form of the chain, e.g. 'V^Λ ≡ Ṽ₀ ⊃ Ṽ′₀ ⊃ Ṽ₁ ⊃ …'."""
    order = list(nx.topological_sort(graph))
    top = graph.nodes[order[0]]
    text = top["label"]
    if top.get("alias"):
        text += f" ≡ {top['alias']}"
    for node in order[1:]:
        text += f" ⊃ {graph.nodes[node]['label']}"
    if graph.graph.get("unbounded"):
        text += " ⊃ …"
    return text


def chain_to_dot(graph: nx.DiGraph) -> str:
    """DOT rendering of the chain through pydot."""
    return nx.drawing.nx_pydot.to_pydot(graph).to_string()
