import pytest

from sl2q._irreps import case_a_mu
from sl2q._scalars import FieldSpec, lam
from sl2q._verma import (
    HighestWeight,
    LevelKind,
    WeightClass,
    chain_to_dot,
    classify_weight,
    embedding_chain,
    render_chain,
    singular_coefficient,
)

from .conftest import admissible_restricted_weight, admissible_weight

GENERIC = FieldSpec.generic()


def assert_levels_are_exact(classification):
    """Reported levels are exactly the zeros of the singular coefficient inside the bound."""
    reported = set(classification.level_numbers())
    hw = classification.hw
    for m in range(1, classification.search_bound + 1):
        assert singular_coefficient(m, hw).is_zero() == (m in reported), f"level {m}"


class TestGenericField:
    def test_first_level(self):
        result = classify_weight(HighestWeight(0, 1, GENERIC))
        assert result.weight_class is WeightClass.REDUCIBLE_A
        assert result.label == "ReducibleA(1)"
        assert result.level_numbers() == [1]
        assert result.levels[0].kind is LevelKind.CASE_A

    @pytest.mark.parametrize("n", [2, 3, 5])
    def test_case_a_has_a_single_level(self, n):
        hw = HighestWeight(case_a_mu(n, 2, GENERIC), 2, GENERIC)
        result = classify_weight(hw, search_bound=11)
        assert result.label == f"ReducibleA({n})"
        assert result.level_numbers() == [n]
        assert 11 - len(result.levels) == 10
        assert_levels_are_exact(result)

    def test_case_b(self):
        hw = HighestWeight(5, lam(GENERIC) * 5, GENERIC)
        result = classify_weight(hw)
        assert result.weight_class is WeightClass.REDUCIBLE_B
        assert result.level_numbers() == list(range(1, 11))
        assert all(level.kind is LevelKind.CASE_B for level in result.levels)

    def test_zero_weight_is_case_b(self):
        assert classify_weight(HighestWeight(0, 0, GENERIC)).weight_class is WeightClass.REDUCIBLE_B

    def test_irreducible(self):
        result = classify_weight(HighestWeight(1, 3, GENERIC))
        assert result.weight_class is WeightClass.GENERIC_IRREDUCIBLE
        assert result.levels == []

    def test_bound_must_be_positive(self):
        with pytest.raises(ValueError):
            classify_weight(HighestWeight(0, 1, GENERIC), search_bound=0)


class TestRootsOfUnity:
    @pytest.mark.parametrize("N", [3, 4, 5])
    def test_periodic(self, N):
        result = classify_weight(admissible_weight(N), search_bound=15)
        assert result.weight_class is WeightClass.ROOT_GENERIC
        assert result.level_numbers() == list(range(N, 16, N))
        assert [level.label for level in result.levels][:2] == ["Periodic(1)", "Periodic(2)"]
        assert 15 - len(result.levels) >= 10
        assert_levels_are_exact(result)

    @pytest.mark.parametrize("N", [3, 4, 5, 6])
    def test_periodic_restricted(self, N):
        result = classify_weight(admissible_restricted_weight(N), search_bound=2 * N)
        assert result.level_numbers() == [N, 2 * N]
        assert_levels_are_exact(result)

    @pytest.mark.parametrize("N", [4, 6])
    def test_half_periodic(self, N):
        result = classify_weight(HighestWeight(3, 0, FieldSpec.root_of_unity(N)), search_bound=20)
        half = N // 2
        assert result.weight_class is WeightClass.ROOT_HALF
        assert result.level_numbers() == list(range(half, 21, half))
        assert [level.label for level in result.levels][:3] == [
            "HalfPeriodic(1)",
            "HalfPeriodic(2)",
            "HalfPeriodic(3)",
        ]
        assert 20 - len(result.levels) >= 10
        assert_levels_are_exact(result)

    def test_root_a(self):
        field = FieldSpec.root_of_unity(5)
        hw = HighestWeight(case_a_mu(2, 1, field), 1, field)
        result = classify_weight(hw, search_bound=16)
        assert result.label == "RootA(2)"
        assert 16 - len(result.levels) == 10
        assert result.level_numbers() == [2, 5, 7, 10, 12, 15]
        kinds = [(level.kind, level.p) for level in result.levels]
        assert kinds[:4] == [
            (LevelKind.CASE_A, 0),
            (LevelKind.PERIODIC, 1),
            (LevelKind.CASE_A, 1),
            (LevelKind.PERIODIC, 2),
        ]
        assert_levels_are_exact(result)

    def test_root_a_first_level(self):
        result = classify_weight(HighestWeight(0, 1, FieldSpec.root_of_unity(3)), search_bound=10)
        assert result.label == "RootA(1)"
        assert result.level_numbers() == [1, 3, 4, 6, 7, 9, 10]

    def test_root_b(self):
        field = FieldSpec.root_of_unity(4)
        result = classify_weight(HighestWeight(0, 0, field))
        assert result.weight_class is WeightClass.ROOT_B
        assert result.level_numbers() == list(range(1, 11))

    def test_zero_central_value_without_case(self):
        result = classify_weight(HighestWeight(1, 0, FieldSpec.root_of_unity(4)))
        assert result.weight_class is WeightClass.ROOT_HALF

    def test_singular_level_json(self):
        result = classify_weight(HighestWeight(3, 0, FieldSpec.root_of_unity(4)), search_bound=4)
        document = result.levels[0].to_json()
        assert document["n"] == 2
        assert document["kind"] == "HalfPeriodic(1)"
        assert document["mu_prime"]["N"] == 4


class TestEmbeddingChain:
    def test_irreducible(self):
        graph = embedding_chain(classify_weight(HighestWeight(1, 3, GENERIC)))
        assert render_chain(graph) == "V^Λ"

    def test_single_submodule(self):
        graph = embedding_chain(classify_weight(HighestWeight(0, 1, GENERIC)))
        assert render_chain(graph) == "V^Λ ⊃ V^Λ′"
        assert graph.number_of_edges() == 1

    def test_root_a_chain(self):
        field = FieldSpec.root_of_unity(5)
        hw = HighestWeight(case_a_mu(2, 1, field), 1, field)
        graph = embedding_chain(classify_weight(hw, search_bound=10))
        assert render_chain(graph) == "V^Λ ≡ Ṽ₀ ⊃ Ṽ′₀ ⊃ Ṽ₁ ⊃ Ṽ′₁ ⊃ Ṽ₂ ⊃ …"
        assert graph.nodes["level_5"]["kind"] == "Periodic(1)"

    def test_half_periodic_chain(self):
        graph = embedding_chain(classify_weight(HighestWeight(3, 0, FieldSpec.root_of_unity(4)), search_bound=4))
        assert render_chain(graph) == "V^Λ ≡ V̂₀ ⊃ V̂₁ ⊃ V̂₂ ⊃ …"

    def test_dot(self):
        graph = embedding_chain(classify_weight(HighestWeight(0, 1, GENERIC)))
        dot = chain_to_dot(graph)
        assert "digraph" in dot
        assert "level_1" in dot
