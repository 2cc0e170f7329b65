"""Independent brute-force oracles used to derive expected values.

These deliberately avoid the library's code paths: independence is checked by
raw circuit containment on frozensets, ranks by full subset enumeration, the
connectivity value by the literal minimum-removal definition, graphic circuits
by walk enumeration, and GF(2) dependence by xor-ing all subsets.
"""

import itertools


def powerset(iterable):
    items = list(iterable)
    return itertools.chain.from_iterable(
        itertools.combinations(items, r) for r in range(len(items) + 1))


def brute_independent(circuits, subset):
    s = frozenset(subset)
    return not any(frozenset(c) <= s for c in circuits)


def brute_rank(circuits, subset):
    best = 0
    for cand in powerset(subset):
        if len(cand) > best and brute_independent(circuits, cand):
            best = len(cand)
    return best


def brute_max_independent(circuits, subset):
    best = frozenset()
    for cand in powerset(subset):
        if len(cand) > len(best) and brute_independent(circuits, cand):
            best = frozenset(cand)
    return best


def brute_min_removal(circuits, ind_a, ind_b):
    """Literal minimum |F| with (A | B) - F independent."""
    union = frozenset(ind_a) | frozenset(ind_b)
    for size in range(len(union) + 1):
        for removed in itertools.combinations(union, size):
            if brute_independent(circuits, union - set(removed)):
                return size
    raise AssertionError("unreachable: removing everything leaves the empty set")


def brute_connectivity(circuits, ground, subset):
    """The basis-union definition: pick maximal independents of both sides and
    count the removals needed."""
    side = frozenset(subset)
    other = frozenset(ground) - side
    basis_a = brute_max_independent(circuits, side)
    basis_b = brute_max_independent(circuits, other)
    return brute_min_removal(circuits, basis_a, basis_b)


def brute_2separation_sides(circuits, ground):
    """All X (up to complement, represented by both sides) with connectivity 1
    and both sides of size >= 2."""
    ground = list(ground)
    out = set()
    for cand in powerset(ground):
        side = frozenset(cand)
        other = frozenset(ground) - side
        if len(side) < 2 or len(other) < 2:
            continue
        if brute_connectivity(circuits, ground, side) == 1:
            out.add(side)
    return out


def brute_graphic_circuits(vertices, edges):
    """Edge sets of simple closed walks, found by walking the multigraph."""
    found = set()
    for i, (u, v) in enumerate(edges):
        if u == v:
            found.add(frozenset([i]))
    for (i, (u1, v1)), (j, (u2, v2)) in itertools.combinations(enumerate(edges), 2):
        if {u1, v1} == {u2, v2} and u1 != v1:
            found.add(frozenset([i, j]))

    incident = {}
    for i, (u, v) in enumerate(edges):
        if u != v:
            incident.setdefault(u, []).append((i, v))
            incident.setdefault(v, []).append((i, u))

    def walk(start, current, used_edges, used_vertices):
        for edge_id, nxt in incident.get(current, ()):
            if edge_id in used_edges:
                continue
            if nxt == start and len(used_edges) >= 2:
                found.add(frozenset(used_edges | {edge_id}))
            elif nxt not in used_vertices:
                walk(start, nxt, used_edges | {edge_id}, used_vertices | {nxt})

    for v in list(incident):
        walk(v, v, frozenset(), frozenset([v]))
    # keep only minimal edge sets (parallel pairs can shadow longer walks)
    minimal = {c for c in found if not any(o < c for o in found)}
    return minimal


def brute_gf2_circuits(columns):
    """Minimal dependent column sets: some nonempty subset xors to zero."""
    def dependent(indices):
        for sub in powerset(indices):
            if not sub:
                continue
            acc = [0] * len(columns[0])
            for i in sub:
                acc = [a ^ b for a, b in zip(acc, columns[i])]
            if not any(acc):
                return True
        return False

    n = len(columns)
    found = []
    for size in range(1, n + 1):
        for combo in itertools.combinations(range(n), size):
            s = frozenset(combo)
            if any(c <= s for c in found):
                continue
            if dependent(combo):
                found.append(s)
    return set(found)


def brute_dual_circuits(circuits, ground):
    """Cocircuits through the dual rank function
    r*(S) = |S| + r(E - S) - r(E): the minimal dual-dependent sets."""
    ground = frozenset(ground)
    full_rank = brute_rank(circuits, ground)

    def dual_rank(subset):
        s = frozenset(subset)
        return len(s) + brute_rank(circuits, ground - s) - full_rank

    found = []
    for size in range(1, len(ground) + 1):
        for combo in itertools.combinations(sorted(ground, key=str), size):
            s = frozenset(combo)
            if any(c <= s for c in found):
                continue
            if dual_rank(s) < len(s):
                found.append(s)
    return set(found)


def brute_localization_circuits(circuits, family, virtual_labels):
    """Images of the circuits not inside a family member, by the definition."""
    members = [frozenset(x) for x in family]
    out = set()
    for c in circuits:
        c = frozenset(c)
        if any(c <= x for x in members):
            continue
        image = set(c)
        for member, label in zip(members, virtual_labels):
            if c & member:
                image -= member
                image.add(label)
        out.add(frozenset(image))
    return out
