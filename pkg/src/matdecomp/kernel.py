"""Finite matroids represented by explicit circuit families.

A matroid is stored as an ordered ground set of labels plus the canonical
sorted family of its circuits.  All set manipulation happens on integer
bitmasks internally; the public surface speaks frozensets of labels.
"""

from __future__ import annotations

import itertools
from enum import Enum
from typing import Iterable, Sequence

from .errors import (
    AxiomViolation,
    DependentInput,
    DuplicateElement,
    GroundSetMismatch,
    GroundSetTooLarge,
    InvalidMatrix,
    InvalidParams,
    NotDependent,
    UnknownVertex,
)

# Hard limit for operations that enumerate all subsets of the ground set.
# 2^n work must stay desk-scale; callers may override per call.
DEFAULT_ENUM_CAP = 14


class ValidationLevel(Enum):
    NONE = "none"
    ANTICHAIN = "antichain"
    FULL = "full"


def check_cap(n: int, cap: int | None = None) -> None:
    limit = DEFAULT_ENUM_CAP if cap is None else cap
    if n > limit:
        raise GroundSetTooLarge(f"ground set of size {n} exceeds enumeration cap {limit}")


class Matroid:
    """Immutable matroid over an ordered ground set of hashable labels.

    The ground order is fixed at construction and drives every deterministic
    tie-break downstream (greedy basis extension, canonical circuit order,
    canonical separation keys).
    """

    __slots__ = ("ground", "_index", "_masks", "_by_element", "_rank_cache", "_circuits",
                 "_hash", "_dual")

    def __init__(self, ground: Sequence, circuit_masks: Iterable[int]):
        ground = tuple(ground)
        if len(set(ground)) != len(ground):
            raise DuplicateElement(f"duplicate labels in ground set {ground!r}")
        object.__setattr__(self, "ground", ground)
        object.__setattr__(self, "_index", {e: i for i, e in enumerate(ground)})
        masks = sorted(set(circuit_masks), key=self._canonical_key)
        object.__setattr__(self, "_masks", tuple(masks))
        by_element = [[] for _ in ground]
        for c in masks:
            m = c
            while m:
                low = m & -m
                by_element[low.bit_length() - 1].append(c)
                m ^= low
        object.__setattr__(self, "_by_element", tuple(tuple(cs) for cs in by_element))
        object.__setattr__(self, "_rank_cache", {0: 0})
        object.__setattr__(self, "_circuits", None)
        object.__setattr__(self, "_hash", None)
        object.__setattr__(self, "_dual", None)

    def __setattr__(self, name, value):
        raise AttributeError("Matroid is immutable")

    # -- basic structure ----------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.ground)

    @property
    def ground_set(self) -> frozenset:
        return frozenset(self.ground)

    @property
    def circuits(self) -> tuple[frozenset, ...]:
        """Circuit family in canonical (size, ground-order lexicographic) order."""
        if self._circuits is None:
            object.__setattr__(self, "_circuits", tuple(self.set_of(m) for m in self._masks))
        return self._circuits

    def circuit_masks(self) -> tuple[int, ...]:
        return self._masks

    def _canonical_key(self, mask: int):
        return (mask.bit_count(), tuple(i for i in range(len(self.ground)) if mask >> i & 1))

    def mask_of(self, subset: Iterable) -> int:
        m = 0
        index = self._index
        for e in subset:
            try:
                m |= 1 << index[e]
            except KeyError:
                raise GroundSetMismatch(f"element {e!r} not in ground set") from None
        return m

    def set_of(self, mask: int) -> frozenset:
        g = self.ground
        return frozenset(g[i] for i in range(len(g)) if mask >> i & 1)

    def sorted_labels(self, subset: Iterable) -> list:
        """Subset as a list in ground order (the canonical presentation)."""
        m = self.mask_of(subset)
        return [self.ground[i] for i in range(self.n) if m >> i & 1]

    def __eq__(self, other):
        if not isinstance(other, Matroid):
            return NotImplemented
        return self.ground_set == other.ground_set and set(self.circuits) == set(other.circuits)

    def __hash__(self):
        if self._hash is None:
            h = hash((self.ground_set, frozenset(self.circuits)))
            object.__setattr__(self, "_hash", h)
        return self._hash

    def __repr__(self):
        return f"Matroid(n={self.n}, circuits={len(self._masks)})"

    # -- independence and rank ----------------------------------------------

    def _mask_independent(self, mask: int) -> bool:
        for c in self._masks:
            if c & mask == c:
                return False
        return True

    def _can_add(self, independent_mask: int, bit: int) -> bool:
        # adding one element to an independent set can only close circuits
        # through that element
        m = independent_mask | bit
        for c in self._by_element[bit.bit_length() - 1]:
            if c & m == c:
                return False
        return True

    def _greedy_extend(self, base_mask: int, within_mask: int) -> int:
        cur = base_mask
        rest = within_mask & ~base_mask
        while rest:
            bit = rest & -rest
            rest ^= bit
            if self._can_add(cur, bit):
                cur |= bit
        return cur

    def _rank_mask(self, mask: int) -> int:
        r = self._rank_cache.get(mask)
        if r is None:
            r = self._greedy_extend(0, mask).bit_count()
            self._rank_cache[mask] = r
        return r

    def is_independent(self, subset: Iterable) -> bool:
        """True iff no circuit is contained in the subset."""
        return self._mask_independent(self.mask_of(subset))

    def extend_to_maximal_independent(self, independent: Iterable, within: Iterable) -> frozenset:
        """Greedily grow `independent` to a maximal independent subset of `within`.

        Greedy order is the fixed ground order, so the result is deterministic.
        """
        imask = self.mask_of(independent)
        smask = self.mask_of(within)
        if imask & ~smask:
            raise InvalidParams("independent set must be contained in the target set")
        if not self._mask_independent(imask):
            raise DependentInput("starting set is dependent")
        return self.set_of(self._greedy_extend(imask, smask))

    def rank(self, subset: Iterable | None = None) -> int:
        """Size of any maximal independent subset of `subset` (default: full rank)."""
        mask = (1 << self.n) - 1 if subset is None else self.mask_of(subset)
        return self._rank_mask(mask)

    def fundamental_circuit(self, element, basis: Iterable) -> frozenset:
        """The unique circuit inside basis+element that contains element."""
        bmask = self.mask_of(basis)
        bit = self.mask_of([element])
        if bit & bmask:
            raise InvalidParams(f"element {element!r} already in the given set")
        if not self._mask_independent(bmask):
            raise DependentInput("given set is dependent")
        total = bmask | bit
        found = [c for c in self._masks if c & total == c and c & bit]
        if not found:
            raise NotDependent(f"{element!r} is independent of the given set")
        if len(found) > 1:
            raise AxiomViolation(
                "C3", "multiple fundamental circuits: circuit family is not a matroid",
                [self.set_of(c) for c in found],
            )
        return self.set_of(found[0])

    # -- loops, coloops, connectivity ----------------------------------------

    def loops(self) -> frozenset:
        return frozenset(self.ground[c.bit_length() - 1] for c in self._masks if c.bit_count() == 1)

    def coloops(self) -> frozenset:
        covered = 0
        for c in self._masks:
            covered |= c
        return self.set_of(~covered & ((1 << self.n) - 1))

    def is_connected(self) -> bool:
        """True iff every two elements lie in a common circuit (|E| <= 1 counts)."""
        if self.n <= 1:
            return True
        # pair (i, j) must be covered by some circuit
        uncovered = set(itertools.combinations(range(self.n), 2))
        for c in self._masks:
            idx = [i for i in range(self.n) if c >> i & 1]
            uncovered.difference_update(itertools.combinations(idx, 2))
            if not uncovered:
                return True
        return False

    # -- bases, dual, minors --------------------------------------------------

    def bases(self, cap: int | None = None) -> tuple[frozenset, ...]:
        """All maximal independent sets, enumerated in canonical order."""
        check_cap(self.n, cap)
        return tuple(self.set_of(m) for m in self._basis_masks())

    def _basis_masks(self) -> list[int]:
        r = self._rank_mask((1 << self.n) - 1)
        out = []
        for combo in itertools.combinations(range(self.n), r):
            m = 0
            for i in combo:
                m |= 1 << i
            if self._mask_independent(m):
                out.append(m)
        return out

    def dual(self, cap: int | None = None) -> "Matroid":
        """Dual matroid: cocircuits are the minimal subsets meeting every basis.

        The result is memoized; Matroid values are immutable so this is safe.
        """
        if self._dual is not None:
            return self._dual
        check_cap(self.n, cap)
        bases = self._basis_masks()
        cocircuits: list[int] = []
        for size in range(1, self.n + 1):
            for combo in itertools.combinations(range(self.n), size):
                m = 0
                for i in combo:
                    m |= 1 << i
                if any(c & m == c for c in cocircuits):
                    continue
                if all(m & b for b in bases):
                    cocircuits.append(m)
        result = Matroid(self.ground, cocircuits)
        object.__setattr__(self, "_dual", result)
        return result

    def restriction(self, subset: Iterable) -> "Matroid":
        """Restriction to `subset`: the circuits lying inside it, order inherited."""
        smask = self.mask_of(subset)
        sub_ground = [self.ground[i] for i in range(self.n) if smask >> i & 1]
        sub = Matroid(sub_ground, [])
        circuits = [sub.mask_of(self.set_of(c)) for c in self._masks if c & smask == c]
        return Matroid(sub_ground, circuits)

    def contraction(self, subset: Iterable) -> "Matroid":
        """Contraction of `subset`, computed through the dual to stay in circuit form."""
        smask = self.mask_of(subset)
        keep = self.set_of(~smask & ((1 << self.n) - 1))
        return self.dual().restriction(self.sorted_labels(keep)).dual()


# -- validation ---------------------------------------------------------------


def _validate_antichain(m: Matroid) -> None:
    masks = m.circuit_masks()
    for c in masks:
        if c == 0:
            raise AxiomViolation("C1", "the empty set is not a circuit", [frozenset()])
    for a, b in itertools.combinations(masks, 2):
        if a & b == a:  # a proper subset of b (masks are distinct)
            raise AxiomViolation(
                "C2", "one circuit is a proper subset of another",
                [m.set_of(a), m.set_of(b)],
            )


def _validate_elimination(m: Matroid) -> None:
    masks = m.circuit_masks()
    for c1, c2 in itertools.combinations(masks, 2):
        common = c1 & c2
        if not common:
            continue
        union = c1 | c2
        rest = common
        while rest:
            bit = rest & -rest
            rest ^= bit
            target = union & ~bit
            if not any(c & target == c for c in masks):
                raise AxiomViolation(
                    "C3",
                    "no circuit inside the union of two circuits minus a common element",
                    [m.set_of(c1), m.set_of(c2), m.set_of(bit)],
                )


def validate(m: Matroid, level: ValidationLevel) -> None:
    if level is ValidationLevel.NONE:
        return
    _validate_antichain(m)
    if level is ValidationLevel.FULL:
        _validate_elimination(m)


# -- constructors ---------------------------------------------------------------


def from_circuits(ground: Sequence, circuits: Iterable[Iterable],
                  level: ValidationLevel = ValidationLevel.ANTICHAIN) -> Matroid:
    """Build a matroid from explicit circuits, normalizing and validating them."""
    m = Matroid(ground, [])
    masks = [m.mask_of(c) for c in circuits]
    m = Matroid(ground, masks)
    validate(m, level)
    return m


def uniform(r: int, n: int) -> Matroid:
    """U_{r,n}: circuits are exactly the (r+1)-subsets of an n-element ground set."""
    if not 0 <= r <= n:
        raise InvalidParams(f"need 0 <= r <= n, got r={r}, n={n}")
    ground = [f"e{i}" for i in range(n)]
    masks = []
    for combo in itertools.combinations(range(n), r + 1):
        bits = 0
        for i in combo:
            bits |= 1 << i
        masks.append(bits)
    return Matroid(ground, masks)


def graphic(vertices: Sequence, edges: Sequence[tuple], cap: int | None = None) -> Matroid:
    """Cycle matroid of a multigraph; ground set is 0..len(edges)-1.

    Loops give 1-circuits and parallel edges 2-circuits.  Circuits are found
    by scanning edge subsets for connected 2-regular subgraphs.
    """
    vset = set(vertices)
    for u, v in edges:
        if u not in vset or v not in vset:
            raise UnknownVertex(f"edge ({u!r}, {v!r}) uses an unknown vertex")
    m = len(edges)
    check_cap(m, cap)
    circuits = []
    for size in range(1, m + 1):
        for combo in itertools.combinations(range(m), size):
            mask = 0
            for i in combo:
                mask |= 1 << i
            if any(c & mask == c for c in circuits):
                continue
            if _is_cycle([edges[i] for i in combo]):
                circuits.append(mask)
    return Matroid(range(m), circuits)


def _is_cycle(edge_list) -> bool:
    degree: dict = {}
    for u, v in edge_list:
        degree[u] = degree.get(u, 0) + 1
        degree[v] = degree.get(v, 0) + 1
    if any(d != 2 for d in degree.values()):
        return False
    # connectivity over the touched vertices
    touched = set(degree)
    start = next(iter(touched))
    seen = {start}
    frontier = [start]
    while frontier:
        x = frontier.pop()
        for u, v in edge_list:
            if u == x and v not in seen:
                seen.add(v)
                frontier.append(v)
            elif v == x and u not in seen:
                seen.add(u)
                frontier.append(u)
    return seen == touched


def linear_gf2(columns: Sequence[Sequence[int]], cap: int | None = None) -> Matroid:
    """Column matroid over GF(2); circuits are the minimal dependent column sets."""
    if not columns:
        return Matroid([], [])
    height = len(columns[0])
    vecs = []
    for col in columns:
        if len(col) != height:
            raise InvalidMatrix("columns must all have the same length")
        v = 0
        for i, bit in enumerate(col):
            if bit not in (0, 1):
                raise InvalidMatrix(f"entries must be 0 or 1, got {bit!r}")
            v |= bit << i
        vecs.append(v)
    m = len(vecs)
    check_cap(m, cap)
    circuits = []
    for size in range(1, m + 1):
        for combo in itertools.combinations(range(m), size):
            mask = 0
            for i in combo:
                mask |= 1 << i
            if any(c & mask == c for c in circuits):
                continue
            if _gf2_rank([vecs[i] for i in combo]) < size:
                circuits.append(mask)
    return Matroid(range(m), circuits)


def _gf2_rank(vecs) -> int:
    pivots: dict[int, int] = {}  # lowest set bit -> reduced vector
    for v in vecs:
        while v:
            low = v & -v
            if low in pivots:
                v ^= pivots[low]
            else:
                pivots[low] = v
                break
    return len(pivots)
