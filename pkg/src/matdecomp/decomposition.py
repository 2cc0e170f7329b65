"""Canonical tree-decomposition of a connected matroid along its good
2-separations, with torsos classified as 3-connected, circuit, or cocircuit.

The tree is built explicitly: edges are the good 2-separations up to
inversion, nodes are equivalence classes of oriented good separations, parts
are intersections over a class.  Every structural claim used on the way is
verified at runtime and raises LemmaFailure when violated.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from .connectivity import (
    Separation,
    enumerate_2separations,
    is_n_connected,
    separation_of,
)
from .errors import (
    Disconnected,
    GroundSetTooLarge,
    LemmaFailure,
    NotAPartition,
    NotATree,
    NotNested,
    NotSymmetric,
    PreconditionViolated,
    TooSmall,
    Unclassifiable,
)
from .kernel import Matroid, check_cap, from_circuits, ValidationLevel
from .localization import localize, shared_label_for, two_sum
from .separations import are_nested, good_2separations


class TorsoKind(Enum):
    THREE_CONNECTED = "3-connected"
    CIRCUIT = "circuit"
    COCIRCUIT = "cocircuit"


def _is_whole_circuit(m: Matroid) -> bool:
    return len(m.circuits) == 1 and m.circuits[0] == m.ground_set


def _is_whole_cocircuit(m: Matroid) -> bool:
    # rank 1 on its whole ground: circuits are exactly all element pairs
    n = m.n
    cs = m.circuits
    return len(cs) == n * (n - 1) // 2 and all(len(c) == 2 for c in cs)


def classify_torso(m: Matroid) -> TorsoKind:
    """Classify a connected matroid on >= 3 elements.

    Precedence circuit -> cocircuit -> 3-connected; the circuit and cocircuit
    cases are asserted mutually exclusive, and for >= 4 elements all three
    are.  A connected matroid fitting none of the three is reported as
    Unclassifiable, which would falsify the trichotomy for primitive
    matroids.
    """
    if m.n < 3:
        raise TooSmall("classification needs at least 3 elements")
    if not m.is_connected():
        raise Disconnected("classification needs a connected matroid")
    circuit = _is_whole_circuit(m)
    cocircuit = m.dual().circuits == (m.ground_set,)
    if circuit and cocircuit:
        raise LemmaFailure("classification", "torso is both a circuit and a cocircuit")
    three = is_n_connected(m, 3)
    if m.n >= 4 and three and (circuit or cocircuit):
        raise LemmaFailure("classification", "classification is not exclusive")
    if circuit:
        return TorsoKind.CIRCUIT
    if cocircuit:
        return TorsoKind.COCIRCUIT
    if three:
        return TorsoKind.THREE_CONNECTED
    raise Unclassifiable("torso is neither 3-connected nor a circuit nor a cocircuit")


# -- equivalence classes of oriented separations -------------------------------


def equivalence_classes(oriented: Sequence[Separation]) -> list[list[Separation]]:
    """Group oriented separations into the node classes of the decomposition
    tree: two are equivalent when equal or when the inverse of one is an
    immediate predecessor of the other.

    The input must be symmetric (closed under inversion) and pairwise nested.
    That the relation really is an equivalence relation is verified at
    runtime.
    """
    seps = list(dict.fromkeys(oriented))
    keys = {(s.side_a, s.side_b) for s in seps}
    for s in seps:
        if (s.side_b, s.side_a) not in keys:
            raise NotSymmetric(f"inverse of {s!r} is missing")
    for s, t in itertools.combinations(seps, 2):
        if not are_nested(s, t):
            raise NotNested(f"{s!r} and {t!r} cross")

    sides = [s.side_a for s in seps]

    def related(i: int, j: int) -> bool:
        if i == j:
            return True
        a_comp, b = seps[i].side_b, seps[j].side_a
        if not (a_comp < b):
            return False
        return not any(a_comp < c < b for c in sides)

    rel = [[related(i, j) for j in range(len(seps))] for i in range(len(seps))]
    for i in range(len(seps)):
        for j in range(len(seps)):
            if rel[i][j] != rel[j][i]:
                raise LemmaFailure("equivalence", "relation is not symmetric")
            if not rel[i][j]:
                continue
            for k in range(len(seps)):
                if rel[j][k] and not rel[i][k]:
                    raise LemmaFailure("equivalence", "relation is not transitive")

    classes: list[list[Separation]] = []
    assigned = [False] * len(seps)
    for i in range(len(seps)):
        if assigned[i]:
            continue
        cls = [seps[j] for j in range(len(seps)) if rel[i][j]]
        for j in range(len(seps)):
            if rel[i][j]:
                assigned[j] = True
        classes.append(cls)
    return classes


# -- the decomposition tree ----------------------------------------------------


@dataclass(frozen=True)
class DecompNode:
    id: str
    part: frozenset
    members: tuple[Separation, ...]  # oriented class; empty for the synthetic node
    torso: Matroid
    kind: TorsoKind


@dataclass(frozen=True)
class DecompEdge:
    a: str
    b: str
    separation: Separation  # oriented so that side_a is the side of node `a`
    shared: str  # virtual element label used by both incident torsos


@dataclass(frozen=True)
class TreeDecomposition:
    """A bare (tree, parts) pair, the shape handled by the verifiers."""

    nodes: tuple
    edges: tuple[tuple, ...]
    parts: dict

    def part_of(self, node):
        return self.parts[node]


class DecompositionTree:
    def __init__(self, matroid: Matroid, nodes: Sequence[DecompNode], edges: Sequence[DecompEdge]):
        self.matroid = matroid
        self.nodes = tuple(nodes)
        self.edges = tuple(edges)
        self._by_id = {n.id: n for n in self.nodes}

    def node(self, node_id: str) -> DecompNode:
        return self._by_id[node_id]

    @property
    def node_ids(self) -> list[str]:
        return [n.id for n in self.nodes]

    def neighbors(self, node_id: str) -> list[str]:
        out = []
        for e in self.edges:
            if e.a == node_id:
                out.append(e.b)
            elif e.b == node_id:
                out.append(e.a)
        return out

    def incident_edges(self, node_id: str) -> list[DecompEdge]:
        return [e for e in self.edges if node_id in (e.a, e.b)]

    def away_side(self, edge: DecompEdge, node_id: str) -> frozenset:
        """S(e, w) for the endpoint w opposite `node_id`."""
        return edge.separation.side_b if edge.a == node_id else edge.separation.side_a

    def component_union(self, edge: DecompEdge, node_id: str) -> frozenset:
        """Union of the parts in the component of `node_id` after removing `edge`."""
        seen = {node_id}
        frontier = [node_id]
        while frontier:
            x = frontier.pop()
            for e in self.incident_edges(x):
                if e is edge:
                    continue
                y = e.b if e.a == x else e.a
                if y not in seen:
                    seen.add(y)
                    frontier.append(y)
        out = set()
        for nid in seen:
            out |= self._by_id[nid].part
        return frozenset(out)

    def plain(self) -> TreeDecomposition:
        return TreeDecomposition(
            tuple(self.node_ids),
            tuple((e.a, e.b) for e in self.edges),
            {n.id: n.part for n in self.nodes},
        )

    def kinds(self) -> dict:
        return {n.id: n.kind for n in self.nodes}


def torso_of(tree: DecompositionTree, node_id: str) -> Matroid:
    return tree.node(node_id).torso


def _torso_matroid(m: Matroid, part: frozenset, away: list[tuple[frozenset, str]]) -> Matroid:
    """Torso on part + one virtual per incident edge: each circuit of the
    matroid not contained in an away side contributes its trace on the part
    plus the virtuals of the away sides it meets."""
    away_masks = [(m.mask_of(side), label) for side, label in away]
    part_mask = m.mask_of(part)
    ground = m.sorted_labels(part) + [label for _, label in away_masks]
    images = set()
    for c in m.circuit_masks():
        if any(c & mask == c for mask, _ in away_masks):
            continue
        image = set(m.set_of(c & part_mask))
        for mask, label in away_masks:
            if c & mask:
                image.add(label)
        images.add(frozenset(image))
    return from_circuits(ground, images, ValidationLevel.NONE)


def build_tree(m: Matroid, cap: int | None = None) -> DecompositionTree:
    """The canonical decomposition tree of a connected matroid with >= 3
    elements.  All claimed invariants (tree-ness, partition, edge identities,
    uniform adhesion 2, irredundancy, torso classification) are verified."""
    if not m.is_connected():
        raise Disconnected("decomposition needs a connected matroid")
    if m.n < 3:
        raise TooSmall("decomposition needs at least 3 elements")
    check_cap(m.n, cap)

    goods = good_2separations(m, cap)
    if not goods:
        torso = m
        kind = classify_torso(torso)
        node = DecompNode("n0", m.ground_set, (), torso, kind)
        return DecompositionTree(m, [node], [])

    oriented = [s for g in goods for s in (g, g.inverse())]
    classes = equivalence_classes(oriented)
    classes.sort(key=lambda cls: min(m._canonical_key(m.mask_of(s.side_a)) for s in cls))
    ids = {}
    for i, cls in enumerate(classes):
        for s in cls:
            ids[(s.side_a, s.side_b)] = f"n{i}"

    edges = []
    for g in goods:
        edges.append(DecompEdge(
            a=ids[(g.side_a, g.side_b)],
            b=ids[(g.side_b, g.side_a)],
            separation=g,
            shared=shared_label_for(g),
        ))
    edges.sort(key=lambda e: m._canonical_key(m.mask_of(e.separation.side_a)))

    nodes = []
    for i, cls in enumerate(classes):
        part = frozenset(m.ground_set)
        for s in cls:
            part &= s.side_a
        nodes.append((f"n{i}", frozenset(part), tuple(cls)))

    tree = _assemble_and_verify(m, nodes, edges)
    return tree


def _assemble_and_verify(m: Matroid, raw_nodes, edges) -> DecompositionTree:
    # tree shape: |E| = |V| - 1 plus connectivity
    ids = [nid for nid, _, _ in raw_nodes]
    if len(edges) != len(ids) - 1:
        raise LemmaFailure("tree", f"{len(ids)} nodes but {len(edges)} edges")
    adjacency = {nid: [] for nid in ids}
    for e in edges:
        adjacency[e.a].append(e.b)
        adjacency[e.b].append(e.a)
    seen = set()
    frontier = [ids[0]]
    while frontier:
        x = frontier.pop()
        if x in seen:
            continue
        seen.add(x)
        frontier.extend(adjacency[x])
    if seen != set(ids):
        raise LemmaFailure("tree", "decomposition graph is not connected")

    # parts partition the ground set
    union = set()
    total = 0
    for _, part, _ in raw_nodes:
        union |= part
        total += len(part)
    if union != m.ground_set or total != m.n:
        raise LemmaFailure("partition", "parts do not partition the ground set")

    # build torsos and check the edge-side identity S(e, [(A, A')]) = A
    placeholder = DecompositionTree(
        m,
        [DecompNode(nid, part, members, m, TorsoKind.CIRCUIT) for nid, part, members in raw_nodes],
        edges,
    )
    for e in edges:
        if placeholder.component_union(e, e.a) != e.separation.side_a:
            raise LemmaFailure("edge-side", f"S(e, a) != A for edge {e.separation!r}")
        if placeholder.component_union(e, e.b) != e.separation.side_b:
            raise LemmaFailure("edge-side", f"S(e, b) != A' for edge {e.separation!r}")
        sep = separation_of(m, e.separation.side_a)
        if sep is None or sep.order != 2:
            raise LemmaFailure("adhesion", f"edge {e.separation!r} does not have order 2")

    nodes = []
    for nid, part, members in raw_nodes:
        incident = placeholder.incident_edges(nid)
        incident.sort(key=lambda e: m._canonical_key(m.mask_of(e.separation.canonical_side)))
        away = [(placeholder.away_side(e, nid), e.shared) for e in incident]
        torso = _torso_matroid(m, part, away)
        if away:
            loc = localize(m, [side for side, _ in away],
                           virtual_labels=[label for _, label in away])
            if loc.local != torso:
                raise LemmaFailure("torso-localization", f"torso at {nid} is not the localization")
        kind = classify_torso(torso)
        nodes.append(DecompNode(nid, part, members, torso, kind))

    for n in nodes:
        if n.torso.n < 3:
            raise LemmaFailure("irredundancy", f"torso at {n.id} has fewer than 3 elements")
    by_id = {n.id: n for n in nodes}
    for e in edges:
        ka, kb = by_id[e.a].kind, by_id[e.b].kind
        if ka == kb and ka in (TorsoKind.CIRCUIT, TorsoKind.COCIRCUIT):
            raise LemmaFailure("irredundancy", f"edge {e.a}-{e.b} joins two {ka.value}s")

    return DecompositionTree(m, nodes, edges)


def reassemble(tree: DecompositionTree) -> Matroid:
    """Fold the torsos back together with 2-sums along the tree edges."""
    order = [tree.nodes[0].id]
    pending = list(tree.edges)
    current = tree.nodes[0].torso
    attached = {order[0]}
    while pending:
        progressed = False
        for e in list(pending):
            if (e.a in attached) == (e.b in attached):
                continue
            new = e.b if e.a in attached else e.a
            current = two_sum(current, tree.node(new).torso, e.shared)
            attached.add(new)
            pending.remove(e)
            progressed = True
        if not progressed:
            raise NotATree("edges do not form a tree")
    return current


# -- primitivity ---------------------------------------------------------------


def is_primitive(m: Matroid) -> bool:
    """Connected with no good 2-separations."""
    if not m.is_connected():
        raise Disconnected("primitivity is defined for connected matroids")
    return not good_2separations(m)


@dataclass(frozen=True)
class PrimitiveReport:
    three_connected: bool
    kind: TorsoKind
    pair_separations_checked: int
    separating_pairs_checked: int
    separating_triples_checked: int
    small_side_checks: int


def verify_primitive_structure(m: Matroid) -> PrimitiveReport:
    """Check the structure theory of primitive matroids on a concrete instance.

    For a primitive, non-3-connected matroid: every element pair is a
    2-separation side, the matroid is a circuit or a cocircuit, every pair is
    separated by some 2-separation, and every triple x, y | z is split by
    some 2-separation.  For every 2-separation with a side of size 2, that
    side is a coindependent circuit or an independent cocircuit.  Any failure
    raises LemmaFailure.
    """
    if not m.is_connected():
        raise Disconnected("input must be connected")
    if m.n < 3:
        raise TooSmall("structure checks need at least 3 elements")
    if not is_primitive(m):
        raise PreconditionViolated("primitive", "input has a good 2-separation")

    three = is_n_connected(m, 3)
    kind = classify_torso(m)
    seps = enumerate_2separations(m)

    pairs = triples = pair_seps = 0
    if not three:
        for x, y in itertools.combinations(m.ground, 2):
            sep = separation_of(m, {x, y})
            if sep is None or sep.order != 2:
                raise LemmaFailure("pair-separation", f"({x!r},{y!r}) is not a 2-separation side")
            pair_seps += 1
        if kind not in (TorsoKind.CIRCUIT, TorsoKind.COCIRCUIT):
            raise LemmaFailure("circuit-or-cocircuit", f"classified as {kind.value}")
        for x, y in itertools.permutations(m.ground, 2):
            if not any(
                (x in s.side_a and y in s.side_b) or (x in s.side_b and y in s.side_a)
                for s in seps
            ):
                raise LemmaFailure("separating-pair", f"no 2-separation splits {x!r}|{y!r}")
            pairs += 1
        for x, y, z in itertools.permutations(m.ground, 3):
            if not any(
                ({x, y} <= s.side_a and z in s.side_b)
                or ({x, y} <= s.side_b and z in s.side_a)
                for s in seps
            ):
                raise LemmaFailure("separating-triple", f"no 2-separation gives {x!r},{y!r}|{z!r}")
            triples += 1

    small = 0
    circuit_set = set(m.circuits)
    cocircuit_set = set(m.dual().circuits)
    full_rank = m.rank()
    for s in seps:
        for side in (s.side_a, s.side_b):
            if len(side) != 2:
                continue
            coindependent_circuit = side in circuit_set and m.rank(m.ground_set - side) == full_rank
            independent_cocircuit = side in cocircuit_set and m.is_independent(side)
            if not (coindependent_circuit or independent_cocircuit):
                raise LemmaFailure(
                    "small-side",
                    f"2-side {sorted(map(str, side))} is neither a coindependent circuit "
                    "nor an independent cocircuit")
            small += 1

    return PrimitiveReport(three, kind, pair_seps, pairs, triples, small)


# -- verification of arbitrary tree-decompositions ------------------------------


@dataclass(frozen=True)
class TreeDecompReport:
    edge_orders: tuple[int | None, ...]  # None when the partition is degenerate
    all_separations: bool
    adhesion: int | None
    uniform: bool
    torso_sizes: tuple[int, ...] | None
    irredundant: bool | None  # None unless uniform adhesion 2

    @property
    def valid(self) -> bool:
        return self.all_separations


def verify_tree_decomposition(m: Matroid, td: TreeDecomposition) -> TreeDecompReport:
    """Check an arbitrary (tree, parts) pair against the matroid: every edge
    must induce a separation; reports adhesion, uniformity and (for uniform
    adhesion 2) irredundancy."""
    nodes = list(td.nodes)
    if not nodes:
        raise NotATree("no nodes")
    if len(set(nodes)) != len(nodes):
        raise NotATree("duplicate node names")
    adjacency = {v: [] for v in nodes}
    for a, b in td.edges:
        if a not in adjacency or b not in adjacency:
            raise NotATree(f"edge ({a!r},{b!r}) uses an unknown node")
        adjacency[a].append(b)
        adjacency[b].append(a)
    if len(td.edges) != len(nodes) - 1:
        raise NotATree(f"{len(nodes)} nodes need {len(nodes) - 1} edges, got {len(td.edges)}")
    seen = set()
    stack = [nodes[0]]
    while stack:
        x = stack.pop()
        if x in seen:
            continue
        seen.add(x)
        stack.extend(adjacency[x])
    if seen != set(nodes):
        raise NotATree("not connected")

    if set(td.parts) != set(nodes):
        raise NotAPartition("parts must be assigned to exactly the nodes")
    union = set()
    total = 0
    for v in nodes:
        part = frozenset(td.parts[v])
        union |= part
        total += len(part)
    if union != m.ground_set or total != m.n:
        raise NotAPartition("parts do not partition the ground set")

    def side_union(edge, endpoint):
        # union of parts in the component of `endpoint` when `edge` is removed
        a, b = edge
        comp = {endpoint}
        stack = [endpoint]
        while stack:
            x = stack.pop()
            for y in adjacency[x]:
                if {x, y} == {a, b}:
                    continue
                if y not in comp:
                    comp.add(y)
                    stack.append(y)
        out = set()
        for v in comp:
            out |= frozenset(td.parts[v])
        return frozenset(out)

    orders: list[int | None] = []
    edge_sides = []
    for a, b in td.edges:
        side = side_union((a, b), a)
        sep = separation_of(m, side)
        edge_sides.append((side, m.ground_set - side))
        orders.append(None if sep is None else sep.order)
    all_seps = all(o is not None for o in orders)
    defined = [o for o in orders if o is not None]
    adhesion = max(defined) if defined else None
    uniform = all_seps and len(set(defined)) <= 1

    torso_sizes = None
    irredundant = None
    if all_seps and (not td.edges or (uniform and adhesion == 2)):
        sizes = []
        kinds = []
        for v in nodes:
            away = []
            for (a, b), (side_a, side_b) in zip(td.edges, edge_sides):
                if v == a:
                    away.append((side_b, f"@t:{a}:{b}"))
                elif v == b:
                    away.append((side_a, f"@t:{a}:{b}"))
            torso = _torso_matroid(m, frozenset(td.parts[v]), away)
            sizes.append(torso.n)
            if _is_whole_circuit(torso):
                kinds.append(TorsoKind.CIRCUIT)
            elif _is_whole_cocircuit(torso):
                kinds.append(TorsoKind.COCIRCUIT)
            else:
                kinds.append(None)
        torso_sizes = tuple(sizes)
        kind_of = dict(zip(nodes, kinds))
        irredundant = all(s >= 3 for s in sizes) and not any(
            kind_of[a] == kind_of[b] and kind_of[a] in (TorsoKind.CIRCUIT, TorsoKind.COCIRCUIT)
            for a, b in td.edges
        )

    return TreeDecompReport(tuple(orders), all_seps, adhesion, uniform, torso_sizes, irredundant)


# -- isomorphism of decompositions ----------------------------------------------


def _as_plain(td) -> TreeDecomposition:
    return td.plain() if isinstance(td, DecompositionTree) else td


def decomposition_isomorphism(td1, td2) -> dict | None:
    """A tree isomorphism matching parts exactly, or None if none exists."""
    t1, t2 = _as_plain(td1), _as_plain(td2)
    if len(t1.nodes) != len(t2.nodes) or len(t1.edges) != len(t2.edges):
        return None
    parts1 = {v: frozenset(t1.parts[v]) for v in t1.nodes}
    parts2 = {v: frozenset(t2.parts[v]) for v in t2.nodes}
    from collections import Counter

    if Counter(parts1.values()) != Counter(parts2.values()):
        return None
    adj1 = {v: set() for v in t1.nodes}
    for a, b in t1.edges:
        adj1[a].add(b)
        adj1[b].add(a)
    adj2 = {v: set() for v in t2.nodes}
    for a, b in t2.edges:
        adj2[a].add(b)
        adj2[b].add(a)

    def match(u, v, mapping):
        """Map the subtree of t1 hanging at u (away from mapped nodes) onto v."""
        if parts1[u] != parts2[v] or len(adj1[u]) != len(adj2[v]):
            return None
        for w in adj1[u]:
            if w in mapping and mapping[w] not in adj2[v]:
                return None
        mapping = dict(mapping)
        mapping[u] = v
        children = [w for w in adj1[u] if w not in mapping]
        available = [x for x in sorted(adj2[v], key=str) if x not in mapping.values()]
        if len(children) != len(available):
            return None
        if not children:
            return mapping
        for perm in itertools.permutations(available):
            cur = mapping
            for w, x in zip(children, perm):
                cur = match(w, x, cur)
                if cur is None:
                    break
            if cur is not None:
                return cur
        return None

    start = t1.nodes[0]
    for v2 in t2.nodes:
        result = match(start, v2, {})
        if result is not None:
            return result
    return None


# -- exhaustive search over alternative decompositions ---------------------------


def search_decompositions(m: Matroid, cap: int = 7) -> list[TreeDecomposition]:
    """All irredundant uniform-adhesion-2 tree-decompositions of `m` whose
    torsos are primitive, found by exhaustive search over nested families of
    2-separations.

    Any such decomposition has at most |E| - 3 tree edges (each torso needs
    >= 3 elements), and its edge separations form a nested symmetric family,
    so scanning all nested families up to that size is exhaustive.
    """
    if not m.is_connected():
        raise Disconnected("search needs a connected matroid")
    if m.n < 3:
        raise TooSmall("search needs at least 3 elements")
    if m.n > cap:
        raise GroundSetTooLarge(f"uniqueness search is capped at {cap} elements")

    all2 = enumerate_2separations(m)
    max_edges = m.n - 3
    nested = [[are_nested(s, t) for t in all2] for s in all2]
    circuit_masks = m.circuit_masks()
    full = (1 << m.n) - 1
    side_masks = [m.mask_of(s.side_a) for s in all2]

    kind_memo: dict = {}

    def torso_shape(part_mask: int, away: tuple[int, ...]):
        """(size, kind-or-None, images) for the torso with the given away sides."""
        key = (part_mask, away)
        cached = kind_memo.get(key)
        if cached is not None:
            return cached
        images = set()
        for c in circuit_masks:
            if any(c & a == c for a in away):
                continue
            flags = 0
            for i, a in enumerate(away):
                if c & a:
                    flags |= 1 << i
            images.add((c & part_mask, flags))
        size = part_mask.bit_count() + len(away)
        if len(images) == 1:
            real, flags = next(iter(images))
            if real == part_mask and flags == (1 << len(away)) - 1:
                kind = TorsoKind.CIRCUIT
                kind_memo[key] = (size, kind, images)
                return size, kind, images
        if len(images) == size * (size - 1) // 2 and all(
                (r.bit_count() + f.bit_count()) == 2 for r, f in images):
            kind = TorsoKind.COCIRCUIT
        else:
            kind = None
        kind_memo[key] = (size, kind, images)
        return size, kind, images

    def torso_matroid_from(part_mask: int, away: tuple[int, ...]) -> Matroid:
        part = m.set_of(part_mask)
        labels = [(m.set_of(a), f"@u{i}") for i, a in enumerate(away)]
        return _torso_matroid(m, part, labels)

    results: list[TreeDecomposition] = []

    def evaluate(indices: tuple[int, ...]) -> None:
        if not indices:
            if is_primitive(m):
                results.append(TreeDecomposition(("n0",), (), {"n0": m.ground_set}))
            return
        oriented = []
        for i in indices:
            mask = side_masks[i]
            oriented.append((mask, full ^ mask))
            oriented.append((full ^ mask, mask))

        def related(x, y):
            if x == y:
                return True
            a_comp, b = x[1], y[0]
            if a_comp == b or a_comp & ~b:
                return False
            return not any(
                c != a_comp and c != b and not (a_comp & ~c) and not (c & ~b)
                for c, _ in oriented
            )

        # union-find over oriented separations
        parent = list(range(len(oriented)))

        def find(i):
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        for i in range(len(oriented)):
            for j in range(i + 1, len(oriented)):
                if related(oriented[i], oriented[j]):
                    ri, rj = find(i), find(j)
                    if ri != rj:
                        parent[ri] = rj
        classes: dict[int, list[int]] = {}
        for i in range(len(oriented)):
            classes.setdefault(find(i), []).append(i)
        class_list = list(classes.values())
        node_of = {}
        for ci, members in enumerate(class_list):
            for i in members:
                node_of[i] = ci

        # parts and away sides per node
        infos = []
        for members in class_list:
            part = full
            away = []
            for i in members:
                part &= oriented[i][0]
                away.append(oriented[i][1])
            away.sort()
            infos.append((part, tuple(away)))

        # irredundancy (i): all torso sizes >= 3
        shapes = []
        for part, away in infos:
            size = part.bit_count() + len(away)
            if size < 3:
                return
            shapes.append(torso_shape(part, away))
        # irredundancy (ii): the edge joining classes of (A,A') and (A',A)
        for k in range(0, len(oriented), 2):
            ka = shapes[node_of[k]][1]
            kb = shapes[node_of[k + 1]][1]
            if ka is kb and ka in (TorsoKind.CIRCUIT, TorsoKind.COCIRCUIT):
                return
        # primitive torsos, checked literally on the survivors
        for (part, away), _shape in zip(infos, shapes):
            torso = torso_matroid_from(part, away)
            try:
                if not is_primitive(torso):
                    return
            except Disconnected:
                return
        node_names = tuple(f"c{i}" for i in range(len(class_list)))
        edges = []
        for k in range(0, len(oriented), 2):
            edges.append((node_names[node_of[k]], node_names[node_of[k + 1]]))
        parts = {node_names[i]: m.set_of(infos[i][0]) for i in range(len(class_list))}
        results.append(TreeDecomposition(node_names, tuple(edges), parts))

    def dfs(start: int, picked: list[int]) -> None:
        evaluate(tuple(picked))
        if len(picked) >= max_edges:
            return
        for j in range(start, len(all2)):
            if all(nested[i][j] for i in picked):
                picked.append(j)
                dfs(j + 1, picked)
                picked.pop()

    dfs(0, [])
    return results
