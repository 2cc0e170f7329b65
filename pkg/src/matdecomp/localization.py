"""Localizations: collapse a disjoint family of 2-separation sides to
virtual elements, with the subset maps in both directions, plus 2-sums and
the split of a matroid along a 2-separation.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .connectivity import Separation, enumerate_2separations, separation_of
from .errors import (
    AxiomViolation,
    BadSharedElement,
    DependentInput,
    Disconnected,
    DuplicateElement,
    FamilyNotDisjoint,
    GroundSetMismatch,
    LemmaFailure,
    NotA2Separation,
    PreconditionViolated,
)
from .kernel import Matroid, ValidationLevel, from_circuits
from .separations import is_good


@dataclass(frozen=True)
class Localization:
    """The matroid obtained from `base` by collapsing each family member to a
    virtual element.

    `family` is stored in canonical order (sorted by smallest ground index);
    `virtual_labels[i]` is the virtual element standing for `family[i]`.
    `witnesses` records the order-2 separation of each family member.
    """

    base: Matroid
    family: tuple[frozenset, ...]
    virtual_labels: tuple[str, ...]
    local: Matroid
    witnesses: tuple[Separation, ...]

    @property
    def real_elements(self) -> frozenset:
        return self.base.ground_set - frozenset().union(frozenset(), *self.family)

    def collapse(self, subset: Iterable) -> frozenset:
        """Image in the local ground set: family members met become virtuals."""
        y = frozenset(subset)
        unknown = y - self.base.ground_set
        if unknown:
            raise GroundSetMismatch(f"{unknown!r} not in the base ground set")
        out = set(y & self.real_elements)
        for label, member in zip(self.virtual_labels, self.family):
            if y & member:
                out.add(label)
        return frozenset(out)

    def expand(self, subset: Iterable) -> frozenset:
        """Preimage in the base ground set: virtuals blow back up to their member."""
        z = frozenset(subset)
        unknown = z - self.local.ground_set
        if unknown:
            raise GroundSetMismatch(f"{unknown!r} not in the local ground set")
        out = set(z & self.real_elements)
        for label, member in zip(self.virtual_labels, self.family):
            if label in z:
                out |= member
        return frozenset(out)

    def member_of_virtual(self, label) -> frozenset:
        return self.family[self.virtual_labels.index(label)]


def localize(m: Matroid, family: Sequence[Iterable],
             virtual_labels: Sequence[str] | None = None,
             require_connected: bool = True) -> Localization:
    """Localization of a connected matroid at a disjoint family of
    2-separation sides.

    Local circuits are the images of the circuits of `m` not contained in any
    family member.  The image family is guaranteed to satisfy the circuit
    axioms; a violation is raised as LemmaFailure, not AxiomViolation.
    """
    if require_connected and not m.is_connected():
        raise Disconnected("localization is defined for connected matroids")
    members = [frozenset(x) for x in family]
    if virtual_labels is not None and len(virtual_labels) != len(members):
        raise PreconditionViolated("labels", "one virtual label per family member")
    # canonical family order: by (size, ground indices) of the member
    order = sorted(range(len(members)), key=lambda i: m._canonical_key(m.mask_of(members[i])))
    members = [members[i] for i in order]
    if virtual_labels is None:
        labels = [f"@e{i}" for i in range(len(members))]
    else:
        labels = [virtual_labels[i] for i in order]
    for i, a in enumerate(members):
        for b in members[i + 1:]:
            if a & b:
                raise FamilyNotDisjoint("family members must be pairwise disjoint")
    witnesses = []
    for i, member in enumerate(members):
        sep = separation_of(m, member)
        if sep is None or sep.order != 2:
            raise NotA2Separation(f"family member {i} is not a 2-separation side", index=i)
        witnesses.append(sep)
    if len(set(labels)) != len(labels) or set(labels) & m.ground_set:
        raise DuplicateElement("virtual labels must be fresh and distinct")

    union_mask = 0
    member_masks = [m.mask_of(x) for x in members]
    for mask in member_masks:
        union_mask |= mask
    real_labels = [m.ground[i] for i in range(m.n) if not (union_mask >> i & 1)]
    local_ground = real_labels + list(labels)

    images = set()
    for c in m.circuit_masks():
        if any(c & mm == c for mm in member_masks):
            continue
        image = set(m.set_of(c & ~union_mask))
        for label, mm in zip(labels, member_masks):
            if c & mm:
                image.add(label)
        images.add(frozenset(image))
    try:
        local = from_circuits(local_ground, images, ValidationLevel.ANTICHAIN)
    except AxiomViolation as exc:  # impossible for genuine matroids
        raise LemmaFailure("localization-axioms", str(exc)) from exc
    return Localization(m, tuple(members), tuple(labels), local, tuple(witnesses))


def independent_image(loc: Localization, independent: Iterable) -> frozenset:
    """Image of an independent set of the base in the local matroid:
    real part kept, virtual added when the member trace is a basis of the
    restriction to that member.  The image is verified independent."""
    i_set = frozenset(independent)
    if not loc.base.is_independent(i_set):
        raise DependentInput("input must be independent in the base matroid")
    out = set(i_set & loc.real_elements)
    for label, member in zip(loc.virtual_labels, loc.family):
        trace = i_set & member
        if len(trace) == loc.base.rank(member):
            out.add(label)
    image = frozenset(out)
    if not loc.local.is_independent(image):
        raise LemmaFailure("local-independence", f"image {sorted(map(str, image))} is dependent")
    return image


def local_bases(loc: Localization) -> tuple[frozenset, ...]:
    """Bases of the local matroid, computed twice: directly as maximal
    independent sets, and as images of the bases of the base matroid.  The two
    answers must coincide."""
    direct = set(loc.local.bases())
    via_images = {independent_image(loc, b) for b in loc.base.bases()}
    if direct != via_images:
        raise LemmaFailure(
            "local-bases",
            f"direct {sorted(map(sorted, direct))} != images {sorted(map(sorted, via_images))}")
    return tuple(sorted(direct, key=lambda b: loc.local._canonical_key(loc.local.mask_of(b))))


def project_2separation(loc: Localization, local_side: Iterable) -> Separation | None:
    """2-separation correspondence between the local matroid and the base.

    For a bipartition of the local ground with both sides of size >= 2: it is
    a 2-separation of the local matroid iff its preimage bipartition is a
    2-separation of the base.  Returns the base separation, or None when
    neither side qualifies; disagreement between the two sides raises
    LemmaFailure.
    """
    side = frozenset(local_side)
    other = loc.local.ground_set - side
    if len(side) < 2 or len(other) < 2:
        raise PreconditionViolated("size", "both local sides must have size >= 2")
    local_sep = separation_of(loc.local, side)
    local_ok = local_sep is not None and local_sep.order == 2
    base_sep = separation_of(loc.base, loc.expand(side))
    base_ok = base_sep is not None and base_sep.order == 2
    if local_ok != base_ok:
        raise LemmaFailure(
            "local-2seps",
            f"local side {sorted(map(str, side))}: local={local_ok} base={base_ok}")
    return base_sep if base_ok else None


def lift_2sep_subset(loc: Localization, base_sep: Separation, local_side: Iterable) -> Separation:
    """A sub-side of the image of a 2-separation is again a 2-separation side
    of the local matroid; verified directly.

    The local side must sit between the image of the separation side and the
    part of that image disjoint from the image of the other side; only
    virtuals of members crossing the separation may be dropped.  (Dropping
    real elements can break the conclusion, so the looser one-sided inclusion
    is not enough.)
    """
    check = separation_of(loc.base, base_sep.side_a)
    if check is None or check.order != 2:
        raise PreconditionViolated("separation", "input is not a 2-separation of the base")
    side = frozenset(local_side)
    upper = loc.collapse(base_sep.side_a)
    lower = upper - loc.collapse(base_sep.side_b)
    if not (lower <= side <= upper):
        raise PreconditionViolated(
            "subset", "local side must contain the one-sided image part and sit inside the image")
    other = loc.local.ground_set - side
    if len(side) < 2 or len(other) < 2:
        raise PreconditionViolated("size", "both local sides must have size >= 2")
    local_sep = separation_of(loc.local, side)
    if local_sep is None or local_sep.order != 2:
        raise LemmaFailure(
            "local-2seps-subset", f"{sorted(map(str, side))} is not a 2-separation side")
    return local_sep


def goodness_corresponds(loc: Localization, local_side: Iterable) -> bool:
    """Goodness transfers between a 2-separation of the local matroid and its
    preimage; returns the (shared) answer."""
    side = frozenset(local_side)
    local_sep = separation_of(loc.local, side)
    if local_sep is None or local_sep.order != 2:
        raise PreconditionViolated("separation", "input is not a 2-separation of the local matroid")
    base_sep = project_2separation(loc, side)
    if base_sep is None:
        raise LemmaFailure("local-2seps", "2-separation did not project")
    good_local = is_good(loc.local, local_sep, enumerate_2separations(loc.local))
    good_base = is_good(loc.base, base_sep, enumerate_2separations(loc.base))
    if good_local != good_base:
        raise LemmaFailure(
            "local-good-seps",
            f"goodness disagrees for {sorted(map(str, side))}: "
            f"local={good_local} base={good_base}")
    return good_local


def two_sum(m1: Matroid, m2: Matroid, shared) -> Matroid:
    """Glue two matroids along one shared element.

    Circuits: circuits of either side avoiding the shared element, plus the
    unions (C1 - e) | (C2 - e) over circuits through it on both sides.
    """
    overlap = m1.ground_set & m2.ground_set
    if overlap != {shared}:
        raise BadSharedElement(f"ground sets must overlap exactly in {shared!r}, got {overlap!r}")
    for m in (m1, m2):
        if shared in m.loops() or shared in m.coloops():
            raise BadSharedElement(f"{shared!r} may not be a loop or coloop")
    ground = [e for e in m1.ground if e != shared] + [e for e in m2.ground if e != shared]
    circuits = []
    through1, through2 = [], []
    for c in m1.circuits:
        (through1 if shared in c else circuits).append(c)
    for c in m2.circuits:
        (through2 if shared in c else circuits).append(c)
    for c1 in through1:
        for c2 in through2:
            circuits.append((c1 - {shared}) | (c2 - {shared}))
    return from_circuits(ground, circuits, ValidationLevel.ANTICHAIN)


class SplitPair(NamedTuple):
    first: Matroid
    second: Matroid
    shared: str


def shared_label_for(sep: Separation) -> str:
    """Deterministic label for the element introduced when splitting along a
    separation; derived from the canonical side so inversions agree."""
    canon = ",".join(sorted(map(str, sep.canonical_side)))
    return "@s:" + hashlib.sha1(canon.encode("utf-8")).hexdigest()[:8]


def split_along(m: Matroid, sep: Separation) -> SplitPair:
    """Split a connected matroid along a 2-separation into the two localizations
    that 2-sum back to it; the round trip is verified."""
    if not m.is_connected():
        raise Disconnected("splitting is defined for connected matroids")
    check = separation_of(m, sep.side_a)
    if check is None or check.order != 2 or sep.order != 2:
        raise NotA2Separation("input is not a 2-separation")
    shared = shared_label_for(sep)
    first = localize(m, [sep.side_b], virtual_labels=[shared]).local
    second = localize(m, [sep.side_a], virtual_labels=[shared]).local
    if two_sum(first, second, shared) != m:
        raise LemmaFailure("2-sum", "split parts do not 2-sum back to the original")
    return SplitPair(first, second, shared)
