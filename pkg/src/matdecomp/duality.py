"""Duality checks: separations, localizations, and the canonical
decomposition all commute with taking duals.  Each verifier raises
LemmaFailure on the first counterexample and returns a small report when
everything holds.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from .connectivity import separation_of
from .decomposition import TorsoKind, build_tree, decomposition_isomorphism
from .errors import LemmaFailure
from .kernel import Matroid, check_cap
from .localization import localize


@dataclass(frozen=True)
class DualityReport:
    check: str
    cases: int
    detail: str = ""


def verify_separation_duality(m: Matroid, cap: int | None = None) -> DualityReport:
    """Every subset yields a separation of the matroid iff it yields one of
    the dual, with the same order."""
    check_cap(m.n, cap)
    dual = m.dual()
    cases = 0
    for mask in range(1 << m.n):
        subset = m.set_of(mask)
        s1 = separation_of(m, subset)
        s2 = separation_of(dual, subset)
        if (s1 is None) != (s2 is None) or (s1 is not None and s1.order != s2.order):
            raise LemmaFailure(
                "separation-duality",
                f"subset {sorted(map(str, subset))}: {s1!r} vs {s2!r} in the dual")
        cases += 1
    return DualityReport("separation-duality", cases)


def verify_dual_extension_counts(m: Matroid, subset: Iterable,
                                 trials: int | None = None,
                                 seed: int = 0) -> DualityReport:
    """Extending B & S to a basis of M|S needs exactly as many elements as
    extending the complementary trace to a basis of the dual restricted to
    the complement.

    Checks every basis when there are at most 500, otherwise `trials`
    (default 100) seeded random ones.
    """
    side = frozenset(subset)
    other = m.ground_set - side
    dual = m.dual()
    bases = list(m.bases())
    if len(bases) > 500:
        rng = random.Random(seed)
        bases = rng.sample(bases, trials if trials is not None else 100)
    side_labels = m.sorted_labels(side)
    other_labels = m.sorted_labels(other)
    side_restriction = m.restriction(side_labels)
    co_restriction = dual.restriction(other_labels)
    cases = 0
    for basis in bases:
        co_basis = m.ground_set - basis
        trace = basis & side
        co_trace = co_basis & other
        extended = side_restriction.extend_to_maximal_independent(trace, side_labels)
        co_extended = co_restriction.extend_to_maximal_independent(co_trace, other_labels)
        f1 = len(extended - trace)
        f2 = len(co_extended - co_trace)
        if f1 != f2:
            raise LemmaFailure(
                "extension-counts",
                f"basis {sorted(map(str, basis))} on side {sorted(map(str, side))}: "
                f"{f1} != {f2}")
        cases += 1
    return DualityReport("extension-counts", cases)


def verify_localization_duality(m: Matroid, family: Sequence[Iterable]) -> DualityReport:
    """Localizing the dual equals dualizing the localization, under the
    index-matched virtual naming."""
    of_dual = localize(m.dual(), family).local
    dual_of = localize(m, family).local.dual()
    if of_dual != dual_of:
        raise LemmaFailure(
            "localization-duality",
            f"family {[sorted(map(str, x)) for x in family]}: "
            f"{sorted(map(sorted, of_dual.circuits))} vs {sorted(map(sorted, dual_of.circuits))}")
    return DualityReport("localization-duality", 1)


_KIND_SWAP = {
    TorsoKind.CIRCUIT: TorsoKind.COCIRCUIT,
    TorsoKind.COCIRCUIT: TorsoKind.CIRCUIT,
    TorsoKind.THREE_CONNECTED: TorsoKind.THREE_CONNECTED,
}


def verify_dual_decomposition(m: Matroid, cap: int | None = None) -> DualityReport:
    """The matroid and its dual have isomorphic canonical decompositions with
    equal parts, dual torsos at matched nodes, and circuit/cocircuit kinds
    swapped."""
    tree = build_tree(m, cap)
    dual_tree = build_tree(m.dual(), cap)
    mapping = decomposition_isomorphism(tree, dual_tree)
    if mapping is None:
        raise LemmaFailure("dual-decomposition", "trees are not part-isomorphic")
    for node in tree.nodes:
        twin = dual_tree.node(mapping[node.id])
        if node.part != twin.part:
            raise LemmaFailure("dual-decomposition", f"parts differ at {node.id}")
        if node.torso.dual() != twin.torso:
            raise LemmaFailure(
                "dual-decomposition", f"torso at {node.id} is not the dual of its twin")
        if _KIND_SWAP[node.kind] != twin.kind:
            raise LemmaFailure(
                "dual-decomposition",
                f"kind at {node.id}: {node.kind.value} should pair with "
                f"{_KIND_SWAP[node.kind].value}, got {twin.kind.value}")
    return DualityReport("dual-decomposition", len(tree.nodes))
