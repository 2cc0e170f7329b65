import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from matdecomp import (
    ValidationLevel,
    from_circuits,
    graphic,
    linear_gf2,
    uniform,
)
from matdecomp.errors import (
    AxiomViolation,
    DependentInput,
    DuplicateElement,
    GroundSetMismatch,
    InvalidMatrix,
    InvalidParams,
    NotDependent,
    UnknownVertex,
)

from oracles import (
    brute_dual_circuits,
    brute_gf2_circuits,
    brute_graphic_circuits,
    brute_rank,
    powerset,
)

K4E_CIRCUITS = {frozenset({0, 1, 2}), frozenset({2, 3, 4}), frozenset({0, 1, 3, 4})}


class TestFromCircuits:
    def test_single_circuit_is_accepted(self):
        m = from_circuits("abc", [{"a", "b", "c"}])
        assert m.circuits == (frozenset("abc"),)

    def test_proper_subset_pair_violates_antichain(self):
        with pytest.raises(AxiomViolation) as exc:
            from_circuits("ab", [{"a"}, {"a", "b"}])
        assert exc.value.axiom == "C2"

    def test_empty_circuit_violates_c1(self):
        with pytest.raises(AxiomViolation) as exc:
            from_circuits("ab", [set()])
        assert exc.value.axiom == "C1"

    def test_full_validation_accepts_k4e_family(self):
        # oracle: elimination brute-forced on the one intersecting pair
        for c1, c2 in itertools.combinations(K4E_CIRCUITS, 2):
            for x in c1 & c2:
                target = (c1 | c2) - {x}
                assert any(c <= target for c in K4E_CIRCUITS)
        m = from_circuits(range(5), K4E_CIRCUITS, ValidationLevel.FULL)
        assert set(m.circuits) == K4E_CIRCUITS

    def test_full_validation_rejects_broken_elimination(self):
        with pytest.raises(AxiomViolation) as exc:
            from_circuits(range(4), [{0, 1, 2}, {2, 3}], ValidationLevel.FULL)
        assert exc.value.axiom == "C3"

    def test_duplicate_ground_labels_rejected(self):
        with pytest.raises(DuplicateElement):
            from_circuits("aa", [])

    def test_foreign_circuit_elements_rejected(self):
        with pytest.raises(GroundSetMismatch):
            from_circuits("ab", [{"a", "z"}])

    def test_canonical_circuit_order(self):
        m = from_circuits(range(5), [{0, 1, 3, 4}, {2, 3, 4}, {0, 1, 2}])
        assert m.circuits == (
            frozenset({0, 1, 2}), frozenset({2, 3, 4}), frozenset({0, 1, 3, 4}))


class TestConstructors:
    def test_uniform_2_3(self):
        assert uniform(2, 3).circuits == (frozenset({"e0", "e1", "e2"}),)

    def test_uniform_free(self):
        assert uniform(3, 3).circuits == ()

    def test_uniform_2_4_circuit_count(self):
        m = uniform(2, 4)
        assert len(m.circuits) == 4 and all(len(c) == 3 for c in m.circuits)

    def test_uniform_invalid(self):
        with pytest.raises(InvalidParams):
            uniform(4, 3)

    def test_graphic_triangle(self):
        m = graphic("abc", [("a", "b"), ("b", "c"), ("c", "a")])
        assert m.circuits == (frozenset({0, 1, 2}),)

    def test_graphic_k4_minus_edge(self, k4e):
        expected = brute_graphic_circuits(
            "abcd", [("a", "b"), ("b", "c"), ("c", "a"), ("c", "d"), ("d", "a")])
        assert expected == K4E_CIRCUITS
        assert set(k4e.circuits) == K4E_CIRCUITS

    def test_graphic_parallel_edges(self):
        m = graphic("ab", [("a", "b"), ("a", "b")])
        assert m.circuits == (frozenset({0, 1}),)

    def test_graphic_loop(self):
        m = graphic("a", [("a", "a")])
        assert m.circuits == (frozenset({0}),)

    def test_graphic_unknown_vertex(self):
        with pytest.raises(UnknownVertex):
            graphic("ab", [("a", "z")])

    def test_gf2_triangle(self):
        cols = [(1, 0), (0, 1), (1, 1)]
        assert brute_gf2_circuits(cols) == {frozenset({0, 1, 2})}
        assert linear_gf2(cols).circuits == (frozenset({0, 1, 2}),)

    def test_gf2_equal_columns(self):
        assert linear_gf2([(1,), (1,)]).circuits == (frozenset({0, 1}),)

    def test_gf2_identity(self):
        assert linear_gf2([(1, 0), (0, 1)]).circuits == ()

    def test_gf2_ragged_rejected(self):
        with pytest.raises(InvalidMatrix):
            linear_gf2([(1, 0), (1,)])

    def test_gf2_matches_oracle_on_random_matrix(self):
        cols = [(1, 0, 1), (0, 1, 1), (1, 1, 0), (1, 1, 1), (0, 0, 1)]
        assert set(linear_gf2(cols).circuits) == brute_gf2_circuits(cols)


class TestIndependenceAndRank:
    def test_pair_independent_in_k4e(self, k4e):
        assert k4e.is_independent({0, 1})

    def test_empty_always_independent(self, k4e, u23):
        assert k4e.is_independent(set()) and u23.is_independent(set())

    def test_circuit_dependent(self, u23):
        assert not u23.is_independent({"e0", "e1", "e2"})

    def test_greedy_extension_uniform(self, u24):
        assert u24.extend_to_maximal_independent(set(), u24.ground) == {"e0", "e1"}

    def test_extension_fixed_point(self, k4e):
        basis = k4e.extend_to_maximal_independent(set(), k4e.ground)
        assert k4e.extend_to_maximal_independent(basis, k4e.ground) == basis

    def test_extension_within_subset(self, k4e):
        assert k4e.extend_to_maximal_independent({2}, {2, 3, 4}) == {2, 3}

    def test_extension_rejects_dependent_start(self, u23):
        with pytest.raises(DependentInput):
            u23.extend_to_maximal_independent({"e0", "e1", "e2"}, {"e0", "e1", "e2"})

    def test_rank_examples(self, k4e, u24):
        assert u24.rank() == 2
        assert k4e.rank() == 3
        assert k4e.rank(set()) == 0

    def test_rank_matches_oracle_everywhere(self, k4e):
        for subset in powerset(range(5)):
            assert k4e.rank(subset) == brute_rank(K4E_CIRCUITS, subset)

    def test_rank_monotone_and_submodular(self, corpus):
        for name, m in corpus:
            if m.n > 6:
                continue
            subsets = [m.set_of(mask) for mask in range(1 << m.n)]
            for a in subsets[:16]:
                for b in subsets[:16]:
                    assert m.rank(a) + m.rank(b) >= m.rank(a | b) + m.rank(a & b), name
                    if a <= b:
                        assert m.rank(a) <= m.rank(b), name


class TestFundamentalCircuit:
    def test_unique_circuit_in_triangle(self, u23):
        assert u23.fundamental_circuit("e2", {"e0", "e1"}) == {"e0", "e1", "e2"}

    def test_k4e_examples(self, k4e):
        assert k4e.fundamental_circuit(2, {0, 1, 3}) == {0, 1, 2}
        assert k4e.fundamental_circuit(4, {0, 1, 3}) == {0, 1, 3, 4}

    def test_not_dependent_raises(self, k4e):
        with pytest.raises(NotDependent):
            k4e.fundamental_circuit(3, {0, 1})


class TestDualAndMinors:
    def test_dual_of_uniform_is_uniform(self):
        for r, n in [(0, 3), (1, 3), (2, 3), (2, 4), (1, 4), (3, 5)]:
            assert uniform(r, n).dual() == uniform(n - r, n)

    def test_dual_u23(self, u23):
        dual = u23.dual()
        assert set(dual.circuits) == {frozenset(p) for p in
                                      itertools.combinations(["e0", "e1", "e2"], 2)}

    def test_dual_of_free_matroid(self):
        dual = uniform(3, 3).dual()
        assert set(dual.circuits) == {frozenset({e}) for e in ["e0", "e1", "e2"]}

    def test_double_dual_identity(self, corpus):
        for name, m in corpus:
            if m.n <= 7:
                assert m.dual().dual() == m, name

    def test_dual_matches_rank_function_oracle(self, k4e):
        assert set(k4e.dual().circuits) == brute_dual_circuits(K4E_CIRCUITS, range(5))

    def test_restriction_examples(self, k4e):
        assert k4e.restriction({0, 1, 2}).circuits == (frozenset({0, 1, 2}),)
        assert k4e.restriction(k4e.ground) == k4e

    def test_contraction_example(self, u23):
        contracted = u23.contraction({"e0"})
        assert contracted.circuits == (frozenset({"e1", "e2"}),)
        assert contracted.ground_set == {"e1", "e2"}

    def test_contraction_via_oracle(self, k4e):
        # contract the edge 2: circuits {0,1} and {3,4} (the two triangles collapse)
        contracted = k4e.contraction({2})
        assert set(contracted.circuits) == {frozenset({0, 1}), frozenset({3, 4})}


class TestConnectivityAndSupport:
    def test_u23_connected(self, u23):
        assert u23.is_connected()

    def test_k4e_connected_all_pairs(self, k4e):
        assert k4e.is_connected()
        for x, y in itertools.combinations(range(5), 2):
            assert any({x, y} <= c for c in k4e.circuits)

    def test_direct_sum_disconnected(self):
        m = from_circuits("abcdef", [{"a", "b", "c"}, {"d", "e", "f"}])
        assert not m.is_connected()

    def test_tiny_matroids_count_as_connected(self):
        assert from_circuits("a", []).is_connected()
        assert from_circuits("", []).is_connected()

    def test_loops_and_coloops(self):
        m = from_circuits("abc", [{"a"}])
        assert m.loops() == {"a"}
        assert m.coloops() == {"b", "c"}

    def test_matroid_values_are_immutable(self, u23):
        with pytest.raises(AttributeError):
            u23.ground = ("x",)


class TestStoredFamilyInvariants:
    def test_antichain_and_elimination_on_corpus(self, corpus):
        for name, m in corpus:
            masks = m.circuit_masks()
            for a, b in itertools.combinations(masks, 2):
                assert a & b != a and a & b != b, name
                common = a & b
                union = a | b
                while common:
                    bit = common & -common
                    common ^= bit
                    assert any(c & (union & ~bit) == c for c in masks), name

    def test_basis_exchange_counts(self, k4e):
        bases = k4e.bases()
        for b1, b2 in itertools.combinations(bases, 2):
            assert len(b1 - b2) == len(b2 - b1)

    def test_no_circuit_meets_cocircuit_once(self, corpus):
        for name, m in corpus:
            if m.n > 7:
                continue
            for c in m.circuits:
                for cc in m.dual().circuits:
                    assert len(c & cc) != 1, name


@given(st.lists(st.lists(st.integers(0, 1), min_size=3, max_size=3),
                min_size=1, max_size=6))
@settings(max_examples=60, deadline=None)
def test_gf2_matroids_satisfy_full_validation(columns):
    m = linear_gf2(columns)
    from matdecomp.kernel import validate
    validate(m, ValidationLevel.FULL)
    assert set(m.circuits) == brute_gf2_circuits(columns)


@given(st.integers(0, 5), st.integers(0, 5), st.data())
@settings(max_examples=40, deadline=None)
def test_uniform_rank_is_clamped_size(r, extra, data):
    n = r + extra
    m = uniform(r, n)
    subset = data.draw(st.sets(st.sampled_from(list(m.ground)) if n else st.nothing(),
                               max_size=n))
    assert m.rank(subset) == min(len(subset), r)
