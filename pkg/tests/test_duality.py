from collections import Counter

from matdecomp import (
    TorsoKind,
    build_tree,
    uniform,
    verify_dual_decomposition,
    verify_dual_extension_counts,
    verify_localization_duality,
    verify_separation_duality,
)


class TestSeparationDuality:
    def test_k4e(self, k4e):
        assert verify_separation_duality(k4e).cases == 32

    def test_self_dual_uniform(self, u24):
        verify_separation_duality(u24)

    def test_u34_against_u14(self, u34):
        assert u34.dual() == uniform(1, 4)
        verify_separation_duality(u34)


class TestExtensionCounts:
    def test_full_side_gives_zero_differences(self, k4e):
        report = verify_dual_extension_counts(k4e, k4e.ground_set)
        assert report.cases == len(k4e.bases())

    def test_k4e_triangle_side(self, k4e):
        verify_dual_extension_counts(k4e, {0, 1, 2})

    def test_empty_side(self, k4e):
        verify_dual_extension_counts(k4e, set())

    def test_explicit_counts_for_one_basis(self, k4e):
        # basis {0,1,3}, side {0,1,2}: the trace {0,1} already spans the
        # triangle side, and the dual trace {4} spans the dual side, so both
        # extension counts are 0
        side = frozenset({0, 1, 2})
        other = k4e.ground_set - side
        basis = frozenset({0, 1, 3})
        trace = basis & side
        extended = k4e.restriction(sorted(side)).extend_to_maximal_independent(
            trace, sorted(side))
        co_basis = k4e.ground_set - basis
        co_trace = co_basis & other
        dual_restriction = k4e.dual().restriction(sorted(other))
        co_extended = dual_restriction.extend_to_maximal_independent(
            co_trace, sorted(other))
        assert len(extended - trace) == len(co_extended - co_trace) == 0


class TestLocalizationDuality:
    def test_empty_family_double_dual(self, k4e):
        verify_localization_duality(k4e, [])

    def test_k4e_single_member(self, k4e):
        verify_localization_duality(k4e, [{3, 4}])

    def test_k4e_two_members(self, k4e):
        # the local matroid is rank one on three elements; its dual is the
        # 3-circuit, and both routes agree
        from matdecomp import localize
        verify_localization_duality(k4e, [{0, 1}, {3, 4}])
        local = localize(k4e, [{0, 1}, {3, 4}]).local
        assert local.dual().circuits == (frozenset({2, "@e0", "@e1"}),)


class TestDualDecomposition:
    def test_k4e_kinds_swap_on_same_parts(self, k4e):
        report = verify_dual_decomposition(k4e)
        assert report.cases == 3
        tree = build_tree(k4e)
        dual_tree = build_tree(k4e.dual())
        parts = {frozenset(n.part) for n in tree.nodes}
        dual_parts = {frozenset(n.part) for n in dual_tree.nodes}
        assert parts == dual_parts == {
            frozenset({0, 1}), frozenset({2}), frozenset({3, 4})}
        kinds = Counter(n.kind for n in tree.nodes)
        dual_kinds = Counter(n.kind for n in dual_tree.nodes)
        assert kinds == Counter({TorsoKind.CIRCUIT: 2, TorsoKind.COCIRCUIT: 1})
        assert dual_kinds == Counter({TorsoKind.COCIRCUIT: 2, TorsoKind.CIRCUIT: 1})

    def test_self_dual_single_node(self, u24):
        verify_dual_decomposition(u24)

    def test_u34_torso_duality(self, u34):
        report = verify_dual_decomposition(u34)
        assert report.cases == 1
