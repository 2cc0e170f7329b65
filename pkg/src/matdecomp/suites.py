"""Verification suites: run every structural lemma as a concrete check on one
matroid.  These back the CLI `verify` command and the acceptance tests.

Hot loops work on bitmasks and deliberately bypass the public wrappers; the
wrappers themselves are exercised by the unit tests.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from .connectivity import enumerate_2separations
from .decomposition import (
    build_tree,
    is_primitive,
    reassemble,
    verify_primitive_structure,
    verify_tree_decomposition,
)
from .duality import (
    verify_dual_decomposition,
    verify_dual_extension_counts,
    verify_localization_duality,
    verify_separation_duality,
)
from .errors import Disconnected, LemmaFailure, NotA2Separation
from .kernel import Matroid
from .localization import local_bases, localize
from .separations import good_2separations


@dataclass
class CheckResult:
    name: str
    passed: bool
    cases: int
    detail: str = ""


@dataclass
class SuiteReport:
    suite: str
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, cases: int, detail: str = "") -> None:
        self.checks.append(CheckResult(name, True, cases, detail))

    def fail(self, name: str, cases: int, detail: str) -> None:
        self.checks.append(CheckResult(name, False, cases, detail))

    def lines(self) -> list[str]:
        out = []
        for c in self.checks:
            status = "pass" if c.passed else "FAIL"
            suffix = f" ({c.detail})" if c.detail else ""
            out.append(f"{status}  {self.suite}/{c.name}: {c.cases} cases{suffix}")
        return out


def _nested_masks(a: int, b: int, full: int) -> bool:
    return (a & b) == 0 or (a & ~b & full) == 0 or (b & ~a & full) == 0 or (full & ~(a | b)) == 0


def _sep_masks(m: Matroid) -> list[int]:
    return [m.mask_of(s.side_a) for s in enumerate_2separations(m)]


def _phi(m: Matroid, mask: int) -> int:
    full = (1 << m.n) - 1
    return m._rank_mask(mask) + m._rank_mask(full & ~mask) - m._rank_mask(full)


def _is_2sep_mask(m: Matroid, mask: int) -> bool:
    full = (1 << m.n) - 1
    return (mask.bit_count() >= 2 and (full & ~mask).bit_count() >= 2
            and _phi(m, mask) == 1)


# ---------------------------------------------------------------------------
# the 2-separation lemma battery
# ---------------------------------------------------------------------------


def run_separation_lemma_suite(m: Matroid, max_family: int = 3) -> SuiteReport:
    report = SuiteReport("lemmas")
    full = (1 << m.n) - 1
    if not m.is_connected():
        report.add("connectivity", 0, "skipped: matroid is disconnected")
        return report
    canonical = _sep_masks(m)
    circuit_masks = m.circuit_masks()
    circuit_index = {c: i for i, c in enumerate(circuit_masks)}

    # corner lemma and the size claim behind it, over all quadrant choices
    corner_cases = claim_cases = 0
    corner_fail = claim_fail = None
    for a, b in itertools.combinations(canonical, 2):
        if _nested_masks(a, b, full):
            continue
        for s1 in (a, full & ~a):
            for s2 in (b, full & ~b):
                corner = s1 & s2
                comp = full & ~corner
                if corner.bit_count() < 2 or comp.bit_count() < 2:
                    continue
                if _is_2sep_mask(m, corner):
                    corner_cases += 1
                else:
                    corner_fail = corner_fail or m.sorted_labels(m.set_of(corner))
                    # claim behind the corner lemma: the union complement
                    # must then keep at least two elements
                    claim_cases += 1
                    if (full & ~(s1 | s2)).bit_count() < 2:
                        claim_fail = claim_fail or m.sorted_labels(m.set_of(s1 | s2))
    if corner_fail is None:
        report.add("corner", corner_cases)
    else:
        report.fail("corner", corner_cases, f"corner {corner_fail} is not a 2-separation")
    if claim_fail is None:
        report.add("corner-size-claim", claim_cases,
                   "vacuous" if claim_cases == 0 else "")
    else:
        report.fail("corner-size-claim", claim_cases, f"union {claim_fail} too large")

    # symmetric difference lemma, once per crossing pair
    sym_cases = 0
    sym_fail = None
    for a, b in itertools.combinations(canonical, 2):
        if _nested_masks(a, b, full):
            continue
        diff = a ^ b
        sym_cases += 1
        if not _is_2sep_mask(m, diff):
            sym_fail = sym_fail or m.sorted_labels(m.set_of(diff))
    if sym_fail is None:
        report.add("symmetric-difference", sym_cases)
    else:
        report.fail("symmetric-difference", sym_cases, f"{sym_fail} is not a 2-separation")

    # trace antichain and switching, per separation side
    improper_cases = switch_cases = 0
    improper_fail = switch_fail = None
    crossing_of: dict[int, list[int]] = {}
    for side in canonical:
        comp = full & ~side
        crossing = [c for c in circuit_masks if c & side and c & comp]
        crossing_of[side] = crossing
        for c1, c2 in itertools.permutations(crossing, 2):
            t1, t2 = c1 & side, c2 & side
            improper_cases += 1
            if t1 != t2 and (t1 & t2) == t1:
                improper_fail = improper_fail or (m.sorted_labels(m.set_of(c1)),
                                                  m.sorted_labels(m.set_of(c2)))
        for c1 in crossing:
            for c2 in crossing:
                switched = (c1 & side) | (c2 & comp)
                switch_cases += 1
                if switched not in circuit_index:
                    switch_fail = switch_fail or m.sorted_labels(m.set_of(switched))
    if improper_fail is None:
        report.add("trace-antichain", improper_cases)
    else:
        report.fail("trace-antichain", improper_cases, f"nested traces: {improper_fail}")
    if switch_fail is None:
        report.add("switching", switch_cases)
    else:
        report.fail("switching", switch_cases, f"{switch_fail} is not a circuit")

    # switching across disjoint families of separation sides
    sides = sorted({s for c in canonical for s in (c, full & ~c)},
                   key=m._canonical_key)
    fam_cases = 0
    fam_fail = None
    families: list[tuple[int, ...]] = []

    def grow(start: int, picked: list[int], union: int) -> None:
        if picked:
            families.append(tuple(picked))
        if len(picked) >= max_family:
            return
        for j in range(start, len(sides)):
            if sides[j] & union:
                continue
            picked.append(sides[j])
            grow(j + 1, picked, union | sides[j])
            picked.pop()

    grow(0, [], 0)
    for family in families:
        union = 0
        for s in family:
            union |= s
        crossing_all = None
        for s in family:
            cs = set(crossing_of[s] if s in crossing_of else
                     [c for c in circuit_masks if c & s and c & (full & ~s)])
            crossing_all = cs if crossing_all is None else (crossing_all & cs)
            if not crossing_all:
                break
        if not crossing_all:
            continue
        outside = full & ~union
        for c1 in crossing_all:
            for c2 in crossing_all:
                if c1 & outside and not (c2 & outside):
                    continue  # hypothesis of the lemma not met
                switched = (c1 & union) | (c2 & outside)
                fam_cases += 1
                if switched not in circuit_index:
                    fam_fail = fam_fail or m.sorted_labels(m.set_of(switched))
    if fam_fail is None:
        report.add("family-switching", fam_cases, f"families up to size {max_family}")
    else:
        report.fail("family-switching", fam_cases, f"{fam_fail} is not a circuit")

    return report


# ---------------------------------------------------------------------------
# localization battery
# ---------------------------------------------------------------------------


def _disjoint_families(m: Matroid, sides: list[int], max_size: int | None = None) -> list[tuple[int, ...]]:
    families: list[tuple[int, ...]] = [()]

    def grow(start: int, picked: list[int], union: int) -> None:
        if max_size is not None and len(picked) >= max_size:
            return
        for j in range(start, len(sides)):
            if sides[j] & union:
                continue
            picked.append(sides[j])
            families.append(tuple(picked))
            grow(j + 1, picked, union | sides[j])
            picked.pop()

    grow(0, [], 0)
    return families


class _FamilyView:
    """Mask arithmetic for one localization family, aligned with localize()."""

    def __init__(self, m: Matroid, member_masks: tuple[int, ...]):
        self.m = m
        self.members = member_masks  # already in canonical order
        union = 0
        for mask in member_masks:
            union |= mask
        self.union = union
        self.real_positions = [i for i in range(m.n) if not (union >> i & 1)]
        self.local_n = len(self.real_positions) + len(member_masks)
        self.member_ranks = [m._rank_mask(mask) for mask in member_masks]
        self._real_to_local = {p: j for j, p in enumerate(self.real_positions)}

    def image_mask(self, mask: int) -> int:
        """Plain image: real trace plus every virtual whose member is met."""
        out = 0
        for p, j in self._real_to_local.items():
            if mask >> p & 1:
                out |= 1 << j
        base = len(self.real_positions)
        for k, member in enumerate(self.members):
            if mask & member:
                out |= 1 << (base + k)
        return out

    def independent_image_mask(self, mask: int) -> int:
        """Image of an independent set: the virtual joins only when the member
        trace is a basis of the restriction to the member."""
        out = 0
        for p, j in self._real_to_local.items():
            if mask >> p & 1:
                out |= 1 << j
        base = len(self.real_positions)
        for k, member in enumerate(self.members):
            if (mask & member).bit_count() == self.member_ranks[k]:
                out |= 1 << (base + k)
        return out

    def expand_mask(self, local_mask: int) -> int:
        out = 0
        for p, j in self._real_to_local.items():
            if local_mask >> j & 1:
                out |= 1 << p
        base = len(self.real_positions)
        for k, member in enumerate(self.members):
            if local_mask >> (base + k) & 1:
                out |= member
        return out


def run_localization_suite(m: Matroid, lift_family_size: int = 1,
                           restriction_family_size: int = 2) -> SuiteReport:
    report = SuiteReport("localization")
    if not m.is_connected():
        report.add("connectivity", 0, "skipped: matroid is disconnected")
        return report
    full = (1 << m.n) - 1
    canonical = _sep_masks(m)
    sides = sorted({s for c in canonical for s in (c, full & ~c)}, key=m._canonical_key)
    families = _disjoint_families(m, sides)
    independents = [mask for mask in range(1 << m.n) if m._mask_independent(mask)]
    good_keys = {m.mask_of(s.canonical_side) for s in good_2separations(m)}

    loc_cases = indep_cases = bases_cases = 0
    project_cases = good_cases = 0
    indep_fail = project_fail = good_fail = None
    bases_fail = loc_fail = None

    for family in families:
        members = [m.set_of(mask) for mask in family]
        try:
            loc = localize(m, members)
        except LemmaFailure as exc:
            loc_fail = loc_fail or str(exc)
            continue
        loc_cases += 1
        view = _FamilyView(m, family)
        local = loc.local
        local_full = (1 << local.n) - 1

        # independence correspondence, both directions at once
        images = {view.independent_image_mask(mask) for mask in independents}
        local_independents = {mask for mask in range(1 << local.n)
                              if local._mask_independent(mask)}
        indep_cases += 1
        if images != local_independents:
            indep_fail = indep_fail or f"family {[sorted(map(str, x)) for x in members]}"

        # basis formula, both routes (raises LemmaFailure on mismatch)
        try:
            local_bases(loc)
            bases_cases += 1
        except LemmaFailure as exc:
            bases_fail = bases_fail or str(exc)

        # 2-separation correspondence over all local bipartitions
        local_seps = None
        for half in range(1 << max(local.n - 1, 0)):
            lmask = (half << 1) | 1
            lcomp = local_full & ~lmask
            if lmask.bit_count() < 2 or lcomp.bit_count() < 2:
                continue
            local_is = _is_2sep_mask(local, lmask)
            base_mask = view.expand_mask(lmask)
            base_is = _is_2sep_mask(m, base_mask)
            project_cases += 1
            if local_is != base_is:
                project_fail = project_fail or (
                    f"local side {sorted(map(str, local.set_of(lmask)))} "
                    f"local={local_is} base={base_is}")
                continue
            # goodness correspondence for the actual 2-separations
            if local_is:
                if local_seps is None:
                    local_seps = _sep_masks(local)
                good_local = all(
                    _nested_masks(lmask, other, local_full) for other in local_seps)
                key = base_mask if base_mask & 1 else full & ~base_mask
                good_cases += 1
                if good_local != (key in good_keys):
                    good_fail = good_fail or (
                        f"local side {sorted(map(str, local.set_of(lmask)))}")

    if loc_fail is None:
        report.add("localize-axioms", loc_cases)
    else:
        report.fail("localize-axioms", loc_cases, loc_fail)
    if indep_fail is None:
        report.add("independence-correspondence", indep_cases)
    else:
        report.fail("independence-correspondence", indep_cases, indep_fail)
    if bases_fail is None:
        report.add("basis-formula", bases_cases)
    else:
        report.fail("basis-formula", bases_cases, bases_fail)
    if project_fail is None:
        report.add("2sep-correspondence", project_cases)
    else:
        report.fail("2sep-correspondence", project_cases, project_fail)
    if good_fail is None:
        report.add("goodness-correspondence", good_cases)
    else:
        report.fail("goodness-correspondence", good_cases, good_fail)

    _check_basis_traces(m, report, canonical, full)
    _check_restriction_order(m, report, canonical, full)
    _check_localized_restriction(m, report, families, restriction_family_size)
    _check_lift(m, report, families, canonical, full, lift_family_size)
    return report


def _check_basis_traces(m: Matroid, report: SuiteReport, canonical, full) -> None:
    equal_cases = nobasis_cases = 0
    equal_fail = nobasis_fail = None
    circuit_masks = m.circuit_masks()
    basis_masks = m._basis_masks()
    for side in canonical:
        for s in (side, full & ~side):
            srestriction = m.restriction(m.sorted_labels(m.set_of(s)))
            sub_bases = [m.mask_of(b) for b in srestriction.bases()]
            rank_s = m._rank_mask(s)
            for bs in sub_bases:
                traces = {c & s for c in circuit_masks if c & s and (c & s & ~bs) == 0}
                equal_cases += 1
                if len(traces) > 1:
                    equal_fail = equal_fail or f"side {m.sorted_labels(m.set_of(s))}"
            for b in basis_masks:
                if (b & s).bit_count() == rank_s:
                    continue  # trace is a basis of the restriction
                nobasis_cases += 1
                if any(c & s and (c & s & ~b) == 0 for c in circuit_masks):
                    nobasis_fail = nobasis_fail or f"side {m.sorted_labels(m.set_of(s))}"
    if equal_fail is None:
        report.add("equal-traces-in-basis", equal_cases)
    else:
        report.fail("equal-traces-in-basis", equal_cases, equal_fail)
    if nobasis_fail is None:
        report.add("no-trace-without-basis", nobasis_cases)
    else:
        report.fail("no-trace-without-basis", nobasis_cases, nobasis_fail)


def _check_restriction_order(m: Matroid, report: SuiteReport, canonical, full) -> None:
    # restricting keeps separation order at most 2 (it may drop to 1 when the
    # restriction disconnects, so "at most" is the right finite statement)
    cases = 0
    fail = None
    for side in canonical:
        comp = full & ~side
        for x in range(1 << m.n):
            a = side & x
            b = comp & x
            if a.bit_count() < 2 or b.bit_count() < 2:
                continue
            cases += 1
            phi = m._rank_mask(a) + m._rank_mask(b) - m._rank_mask(x)
            if phi > 1:
                fail = fail or (f"side {m.sorted_labels(m.set_of(side))} in "
                                f"{m.sorted_labels(m.set_of(x))}: order {phi + 1}")
    if fail is None:
        report.add("restriction-order", cases)
    else:
        report.fail("restriction-order", cases, fail)


def _check_localized_restriction(m: Matroid, report: SuiteReport, families,
                                 max_size: int) -> None:
    cases = skipped = 0
    fail = None
    for family in families:
        if not family or len(family) > max_size:
            continue
        members = [m.set_of(mask) for mask in family]
        loc = localize(m, members)
        local = loc.local
        for amask in range(1, 1 << local.n):
            a_labels = [local.ground[i] for i in range(local.n) if amask >> i & 1]
            a_set = frozenset(a_labels)
            inner_members = [mem for label, mem in zip(loc.virtual_labels, loc.family)
                             if label in a_set]
            inner_labels = [label for label in loc.virtual_labels if label in a_set]
            expanded = loc.expand(a_set)
            restricted = m.restriction(m.sorted_labels(expanded))
            try:
                inner = localize(restricted, inner_members, virtual_labels=inner_labels)
            except (Disconnected, NotA2Separation):
                skipped += 1
                continue
            left = local.restriction(a_labels)
            cases += 1
            if left != inner.local:
                fail = fail or f"A {sorted(map(str, a_set))}"
    if fail is None:
        report.add("localized-restriction", cases, f"{skipped} hypothesis-skips")
    else:
        report.fail("localized-restriction", cases, fail)


def _check_lift(m: Matroid, report: SuiteReport, families, canonical, full,
                max_size: int) -> None:
    # only virtuals of members crossing the separation may be dropped from
    # the image; enumerate every side between that floor and the full image
    cases = 0
    fail = None
    for family in families:
        if len(family) > max_size:
            continue
        view = _FamilyView(m, family)
        members = [m.set_of(mask) for mask in family]
        loc = localize(m, members)
        local = loc.local
        local_full = (1 << local.n) - 1
        for side in canonical:
            for s in (side, full & ~side):
                upper = view.image_mask(s)
                lower = upper & ~view.image_mask(full & ~s)
                optional = [i for i in range(local.n) if (upper & ~lower) >> i & 1]
                for k in range(len(optional) + 1):
                    for combo in itertools.combinations(optional, k):
                        sub = lower
                        for i in combo:
                            sub |= 1 << i
                        if sub.bit_count() < 2 or (local_full & ~sub).bit_count() < 2:
                            continue
                        cases += 1
                        if not _is_2sep_mask(local, sub):
                            fail = fail or (
                                f"{sorted(map(str, local.set_of(sub)))} from side "
                                f"{m.sorted_labels(m.set_of(s))}")
    if fail is None:
        report.add("lift-2seps", cases, f"families up to size {max_size}")
    else:
        report.fail("lift-2seps", cases, fail)


# ---------------------------------------------------------------------------
# decomposition battery
# ---------------------------------------------------------------------------


def run_decomposition_suite(m: Matroid) -> SuiteReport:
    report = SuiteReport("decomposition")
    if not m.is_connected():
        report.add("connectivity", 0, "skipped: matroid is disconnected")
        return report
    if m.n < 3:
        report.add("size", 0, "skipped: fewer than 3 elements")
        return report

    try:
        tree = build_tree(m)
        report.add("build", len(tree.nodes))
    except LemmaFailure as exc:
        report.fail("build", 0, str(exc))
        return report

    prim_fail = None
    for node in tree.nodes:
        if not is_primitive(node.torso):
            prim_fail = prim_fail or f"torso at {node.id} has a good 2-separation"
    if prim_fail is None:
        report.add("torsos-primitive", len(tree.nodes))
    else:
        report.fail("torsos-primitive", len(tree.nodes), prim_fail)

    try:
        for node in tree.nodes:
            verify_primitive_structure(node.torso)
        report.add("primitive-structure", len(tree.nodes))
    except LemmaFailure as exc:
        report.fail("primitive-structure", len(tree.nodes), str(exc))

    if reassemble(tree) == m:
        report.add("reassembly", len(tree.edges) + 1)
    else:
        report.fail("reassembly", len(tree.edges) + 1, "2-sum fold does not reproduce the matroid")

    td_report = verify_tree_decomposition(m, tree.plain())
    ok = td_report.valid and (not tree.edges or (td_report.uniform and td_report.adhesion == 2))
    ok = ok and td_report.irredundant
    if ok:
        report.add("tree-decomposition", len(tree.edges))
    else:
        report.fail("tree-decomposition", len(tree.edges), repr(td_report))

    # chains of strictly nested good sides stay short
    goods = good_2separations(m)
    side_masks = sorted({m.mask_of(s.side_a) for s in goods} |
                        {m.mask_of(s.side_b) for s in goods},
                        key=int.bit_count)
    longest = {}
    best = 0
    for mask in side_masks:
        longest[mask] = 1 + max(
            (longest[o] for o in longest if o != mask and o & ~mask == 0), default=0)
        best = max(best, longest[mask])
    if best <= m.n:
        report.add("chain-length", len(side_masks), f"longest {best}")
    else:
        report.fail("chain-length", len(side_masks), f"chain of length {best} > {m.n}")

    return report


# ---------------------------------------------------------------------------
# duality battery
# ---------------------------------------------------------------------------


def run_duality_suite(m: Matroid, seed: int = 0) -> SuiteReport:
    report = SuiteReport("duality")
    try:
        r = verify_separation_duality(m)
        report.add("separation-duality", r.cases)
    except LemmaFailure as exc:
        report.fail("separation-duality", 0, str(exc))

    cases = 0
    try:
        if m.n <= 7:
            subsets = [m.set_of(mask) for mask in range(1 << m.n)]
        else:
            subsets = [frozenset(), m.ground_set]
            subsets += [frozenset([e]) for e in m.ground]
            subsets += [s.side_a for s in enumerate_2separations(m)]
            rng = random.Random(seed)
            subsets += [m.set_of(rng.randrange(1 << m.n)) for _ in range(32)]
        for s in subsets:
            r = verify_dual_extension_counts(m, s, seed=seed)
            cases += r.cases
        report.add("extension-counts", cases, f"{len(subsets)} subsets")
    except LemmaFailure as exc:
        report.fail("extension-counts", cases, str(exc))

    if m.is_connected():
        full = (1 << m.n) - 1
        canonical = _sep_masks(m)
        sides = sorted({s for c in canonical for s in (c, full & ~c)}, key=m._canonical_key)
        max_fam = 2 if m.n <= 6 else 1
        fam_cases = 0
        try:
            verify_localization_duality(m, [])
            fam_cases += 1
            for family in _disjoint_families(m, sides, max_size=max_fam):
                if not family:
                    continue
                verify_localization_duality(m, [m.set_of(x) for x in family])
                fam_cases += 1
            report.add("localization-duality", fam_cases, f"families up to size {max_fam}")
        except LemmaFailure as exc:
            report.fail("localization-duality", fam_cases, str(exc))

        if m.n >= 3:
            try:
                r = verify_dual_decomposition(m)
                report.add("dual-decomposition", r.cases)
            except LemmaFailure as exc:
                report.fail("dual-decomposition", 0, str(exc))
    else:
        report.add("localization-duality", 0, "skipped: matroid is disconnected")
    return report


def run_all_suites(m: Matroid, seed: int = 0) -> list[SuiteReport]:
    return [
        run_separation_lemma_suite(m),
        run_localization_suite(m),
        run_decomposition_suite(m),
        run_duality_suite(m, seed=seed),
    ]
