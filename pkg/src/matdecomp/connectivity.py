"""Connectivity function, separation orders, and separation enumeration.

The connectivity value of a side X is the number of elements that must be
dropped from a union of side-bases to reach a basis of the whole matroid.
For finite matroids it coincides with rank(X) + rank(X complement) - rank(E),
which is what we compute; the basis-union form is kept as `excess` and is
cross-checked against the identity by the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import DependentInput, GroundSetMismatch
from .kernel import Matroid, check_cap


@dataclass(frozen=True)
class Separation:
    """An ordered bipartition (side_a, side_b) of a ground set with its order.

    `order` is the k of "k-separation", i.e. connectivity value + 1.  Both
    sides have size >= order.
    """

    ground: tuple
    side_a: frozenset
    side_b: frozenset
    order: int

    def inverse(self) -> "Separation":
        return Separation(self.ground, self.side_b, self.side_a, self.order)

    @property
    def canonical_side(self) -> frozenset:
        """The side containing the least element in ground order."""
        return self.side_a if self.ground[0] in self.side_a else self.side_b

    def key(self) -> frozenset:
        """Inversion-invariant identity of this separation."""
        return self.canonical_side

    def is_canonical(self) -> bool:
        return self.ground[0] in self.side_a

    def canonical(self) -> "Separation":
        return self if self.is_canonical() else self.inverse()

    def __repr__(self):
        a = sorted(map(str, self.side_a))
        b = sorted(map(str, self.side_b))
        return f"Separation({a}|{b}, order={self.order})"


def check_separation_ground(m: Matroid, s: Separation) -> None:
    if s.ground != m.ground:
        raise GroundSetMismatch("separation belongs to a different ground set")


def excess(m: Matroid, independent_a: Iterable, independent_b: Iterable) -> int:
    """Minimum number of elements to drop from the union of two independent
    sets so that the remainder is independent."""
    amask = m.mask_of(independent_a)
    bmask = m.mask_of(independent_b)
    if not m._mask_independent(amask) or not m._mask_independent(bmask):
        raise DependentInput("both input sets must be independent")
    union = amask | bmask
    return union.bit_count() - m._rank_mask(union)


def connectivity_value(m: Matroid, subset: Iterable) -> int:
    """rank(X) + rank(X complement) - rank(E); equals the basis-union excess."""
    mask = m.mask_of(subset)
    return _connectivity_mask(m, mask)


def _connectivity_mask(m: Matroid, mask: int) -> int:
    full = (1 << m.n) - 1
    return m._rank_mask(mask) + m._rank_mask(full & ~mask) - m._rank_mask(full)


def separation_of(m: Matroid, subset: Iterable) -> Separation | None:
    """The separation (X, X complement) of order phi(X)+1, or None when a side
    is too small to qualify."""
    mask = m.mask_of(subset)
    full = (1 << m.n) - 1
    k = _connectivity_mask(m, mask)
    if mask.bit_count() >= k + 1 and (full & ~mask).bit_count() >= k + 1:
        return Separation(m.ground, m.set_of(mask), m.set_of(full & ~mask), k + 1)
    return None


def is_separation_of_order(m: Matroid, mask: int, order: int) -> bool:
    full = (1 << m.n) - 1
    if mask.bit_count() < order or (full & ~mask).bit_count() < order:
        return False
    return _connectivity_mask(m, mask) == order - 1


def enumerate_separations(m: Matroid, order: int = 2, cap: int | None = None) -> list[Separation]:
    """All separations of the given order, one per key, in canonical order.

    Canonical order sorts the canonical sides by (size, ground-order indices).
    """
    check_cap(m.n, cap)
    n = m.n
    if n == 0:
        return []
    full = (1 << n) - 1
    found = []
    # scanning only sides containing element 0 visits each key exactly once
    for half in range(1 << (n - 1)):
        mask = (half << 1) | 1
        if mask.bit_count() < order or (full & ~mask).bit_count() < order:
            continue
        if _connectivity_mask(m, mask) == order - 1:
            found.append(mask)
    found.sort(key=m._canonical_key)
    return [
        Separation(m.ground, m.set_of(mask), m.set_of(full & ~mask), order)
        for mask in found
    ]


def enumerate_2separations(m: Matroid, cap: int | None = None) -> list[Separation]:
    return enumerate_separations(m, 2, cap)


def is_n_connected(m: Matroid, n: int, cap: int | None = None) -> bool:
    """True iff the matroid has no separation of order below n."""
    check_cap(m.n, cap)
    size = m.n
    if size == 0:
        return True
    full = (1 << size) - 1
    for half in range(1 << (size - 1)):
        mask = (half << 1) | 1
        k = _connectivity_mask(m, mask)
        order = k + 1
        if order < n and mask.bit_count() >= order and (full & ~mask).bit_count() >= order:
            return False
    return True
