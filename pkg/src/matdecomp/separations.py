"""Calculus of 2-separations: nestedness, derived separations, goodness,
and circuit switching.

The operations that realize a structural lemma (corner, symmetric difference,
switching) both construct their result and verify it, raising LemmaFailure on
a counterexample.  On a correct matroid they never raise.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .connectivity import (
    Separation,
    check_separation_ground,
    enumerate_2separations,
    separation_of,
)
from .errors import (
    Disconnected,
    GroundSetMismatch,
    LemmaFailure,
    NotACircuit,
    NotCrossing,
    PreconditionViolated,
    QuadrantTooSmall,
)
from .kernel import Matroid


@dataclass(frozen=True)
class Quadrants:
    """The four pairwise intersections of the sides of two separations."""

    q11: frozenset  # A  & B
    q12: frozenset  # A  & B'
    q21: frozenset  # A' & B
    q22: frozenset  # A' & B'

    def all_nonempty(self) -> bool:
        return bool(self.q11) and bool(self.q12) and bool(self.q21) and bool(self.q22)


def quadrants(s1: Separation, s2: Separation) -> Quadrants:
    if s1.ground != s2.ground:
        raise GroundSetMismatch("separations live on different ground sets")
    return Quadrants(
        s1.side_a & s2.side_a,
        s1.side_a & s2.side_b,
        s1.side_b & s2.side_a,
        s1.side_b & s2.side_b,
    )


def are_nested(s1: Separation, s2: Separation) -> bool:
    """Nested iff some quadrant is empty; crossing otherwise."""
    return not quadrants(s1, s2).all_nonempty()


def are_crossing(s1: Separation, s2: Separation) -> bool:
    return quadrants(s1, s2).all_nonempty()


def _require_crossing_2seps(m: Matroid, s1: Separation, s2: Separation) -> None:
    check_separation_ground(m, s1)
    check_separation_ground(m, s2)
    if s1.order != 2 or s2.order != 2:
        raise PreconditionViolated("order", "both separations must have order 2")
    if are_nested(s1, s2):
        raise NotCrossing("separations are nested")


def corner_separation(m: Matroid, s1: Separation, s2: Separation) -> Separation:
    """Corner of two crossing 2-separations: (A & B, complement).

    Requires the corner and its complement to have size at least 2; the
    constructed partition is verified to have order 2.
    """
    _require_crossing_2seps(m, s1, s2)
    corner = s1.side_a & s2.side_a
    rest = m.ground_set - corner
    if len(corner) < 2 or len(rest) < 2:
        raise QuadrantTooSmall(f"corner {sorted(map(str, corner))} or its complement is too small")
    sep = separation_of(m, corner)
    if sep is None or sep.order != 2:
        raise LemmaFailure("corner", f"corner {sorted(map(str, corner))} is not a 2-separation")
    return sep


def symmetric_difference_separation(m: Matroid, s1: Separation, s2: Separation) -> Separation:
    """(A symmetric-difference B, complement) for crossing 2-separations.

    Both sides are automatically of size >= 2 because all four quadrants are
    nonempty.
    """
    _require_crossing_2seps(m, s1, s2)
    diff = (s1.side_a | s2.side_a) - (s1.side_a & s2.side_a)
    sep = separation_of(m, diff)
    if sep is None or sep.order != 2:
        raise LemmaFailure(
            "symmetric-difference", f"{sorted(map(str, diff))} is not a 2-separation")
    return sep


def is_good(m: Matroid, s: Separation, all_2seps: Sequence[Separation]) -> bool:
    """Good means nested with every 2-separation of the matroid."""
    check_separation_ground(m, s)
    return all(are_nested(s, other) for other in all_2seps)


def good_2separations(m: Matroid, cap: int | None = None) -> list[Separation]:
    """The canonical list of good 2-separations; pairwise nested by definition."""
    if not m.is_connected():
        raise Disconnected("good 2-separations are defined for connected matroids")
    seps = enumerate_2separations(m, cap)
    return [s for s in seps if all(are_nested(s, t) for t in seps)]


def circuit_crosses(circuit: Iterable, s: Separation) -> bool:
    """A circuit crosses a separation iff it meets both sides."""
    c = frozenset(circuit)
    return bool(c & s.side_a) and bool(c & s.side_b)


def switch_circuits(m: Matroid, circuit1: Iterable, circuit2: Iterable,
                    s: Separation) -> frozenset:
    """(C1 & S) | (C2 & S complement), verified to be a circuit."""
    check_separation_ground(m, s)
    if s.order != 2:
        raise PreconditionViolated("order", "switching needs a 2-separation")
    c1 = frozenset(circuit1)
    c2 = frozenset(circuit2)
    family = set(m.circuits)
    if c1 not in family or c2 not in family:
        raise NotACircuit("both inputs must be circuits of the matroid")
    if not circuit_crosses(c1, s) or not circuit_crosses(c2, s):
        raise NotCrossing("both circuits must cross the separation")
    switched = (c1 & s.side_a) | (c2 & s.side_b)
    if switched not in family:
        raise LemmaFailure("switching", f"{sorted(map(str, switched))} is not a circuit")
    return switched


def switch_across_family(m: Matroid, circuit1: Iterable, circuit2: Iterable,
                         family: Sequence[Iterable]) -> frozenset:
    """Switching across a disjoint family of 2-separation sides.

    With sides S_i, returns (C1 & union S_i) | (C2 & complement), verified to
    be a circuit.  An empty family returns C2 unchanged.
    """
    sides = [frozenset(x) for x in family]
    for i, a in enumerate(sides):
        for b in sides[i + 1:]:
            if a & b:
                raise PreconditionViolated("disjoint", "family members must be pairwise disjoint")
    for i, x in enumerate(sides):
        sep = separation_of(m, x)
        if sep is None or sep.order != 2:
            raise PreconditionViolated("side", f"family member {i} is not a 2-separation side")
    c1 = frozenset(circuit1)
    c2 = frozenset(circuit2)
    circuits = set(m.circuits)
    if c1 not in circuits or c2 not in circuits:
        raise NotACircuit("both inputs must be circuits of the matroid")
    union = frozenset().union(*sides) if sides else frozenset()
    outside = m.ground_set - union
    for i, x in enumerate(sides):
        comp = m.ground_set - x
        for c in (c1, c2):
            if not (c & x and c & comp):
                raise PreconditionViolated(
                    "condition-1", f"circuit does not cross family member {i}")
    if c1 & outside and not (c2 & outside):
        raise PreconditionViolated(
            "condition-2", "C2 must meet the family complement whenever C1 does")
    switched = (c1 & union) | (c2 & outside)
    if switched not in circuits:
        raise LemmaFailure("family-switching", f"{sorted(map(str, switched))} is not a circuit")
    return switched
