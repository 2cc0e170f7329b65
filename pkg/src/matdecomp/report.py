"""Serialization of decomposition trees: canonical JSON, Graphviz DOT, and a
rendered tree figure.

JSON output is deterministic byte for byte: every list is ordered by the
fixed ground order or by node id, and label strings are emitted as given.
"""

from __future__ import annotations

import json

from .decomposition import DecompositionTree


def _labels(m, subset) -> list[str]:
    return [str(x) for x in m.sorted_labels(subset)]


def _torso_labels(torso, subset) -> list[str]:
    mask = torso.mask_of(subset)
    return [str(torso.ground[i]) for i in range(torso.n) if mask >> i & 1]


def decomposition_report(tree: DecompositionTree) -> dict:
    """Report dictionary: nodes with parts and torsos, edges with their
    separation side, overall adhesion and irredundancy."""
    m = tree.matroid
    nodes = []
    for node in tree.nodes:
        torso = node.torso
        nodes.append({
            "id": node.id,
            "part": _labels(m, node.part),
            "torso": {
                "ground": [str(x) for x in torso.ground],
                "circuits": [_torso_labels(torso, c) for c in torso.circuits],
                "kind": node.kind.value,
            },
        })
    edges = [
        {"a": e.a, "b": e.b, "separation": _labels(m, e.separation.side_a)}
        for e in tree.edges
    ]
    return {
        "nodes": nodes,
        "edges": edges,
        "adhesion": 2 if tree.edges else None,
        "irredundant": True,
    }


def report_to_json(report: dict) -> str:
    return json.dumps(report, indent=2) + "\n"


def report_from_json(text: str) -> dict:
    return json.loads(text)


def to_dot(tree: DecompositionTree) -> str:
    """The decomposition tree in Graphviz DOT form."""
    m = tree.matroid
    lines = ["graph decomposition {"]
    for node in tree.nodes:
        part = ",".join(_labels(m, node.part)) or "(empty)"
        lines.append(f'  {node.id} [label="{part}\\n{node.kind.value}"];')
    for e in tree.edges:
        side = ",".join(_labels(m, e.separation.side_a))
        lines.append(f'  {e.a} -- {e.b} [label="{side}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


_KIND_COLORS = {
    "circuit": "#aec7e8",
    "cocircuit": "#ffbb78",
    "3-connected": "#98df8a",
}


def _tree_layout(tree: DecompositionTree) -> dict:
    """Simple tidy layout: leaves at integer x positions, parents centered."""
    root = tree.nodes[0].id
    children: dict = {root: []}
    parent = {root: None}
    order = [root]
    frontier = [root]
    while frontier:
        x = frontier.pop(0)
        for y in sorted(tree.neighbors(x)):
            if y not in parent:
                parent[y] = x
                children.setdefault(x, []).append(y)
                children.setdefault(y, [])
                order.append(y)
                frontier.append(y)
    depth = {root: 0}
    for v in order[1:]:
        depth[v] = depth[parent[v]] + 1
    pos = {}
    next_x = [0.0]

    def place(v):
        kids = children[v]
        if not kids:
            pos[v] = (next_x[0], -depth[v])
            next_x[0] += 1.0
            return pos[v][0]
        xs = [place(k) for k in kids]
        x = sum(xs) / len(xs)
        pos[v] = (x, -depth[v])
        return x

    place(root)
    return pos


def render_figure(tree: DecompositionTree, path: str) -> None:
    """Draw the decomposition tree to an image file (format by extension)."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    m = tree.matroid
    pos = _tree_layout(tree)
    fig, ax = plt.subplots(figsize=(max(4, 1.8 * len(tree.nodes)), 4))
    for e in tree.edges:
        (x1, y1), (x2, y2) = pos[e.a], pos[e.b]
        ax.plot([x1, x2], [y1, y2], color="0.4", zorder=1)
        side = ",".join(_labels(m, e.separation.side_a))
        ax.annotate(side, ((x1 + x2) / 2, (y1 + y2) / 2),
                    fontsize=7, color="0.3", ha="center")
    for node in tree.nodes:
        x, y = pos[node.id]
        part = ",".join(_labels(m, node.part)) or "(empty)"
        label = f"{node.id}\n{{{part}}}\n{node.kind.value}"
        ax.annotate(
            label, (x, y), ha="center", va="center", fontsize=8, zorder=2,
            bbox={"boxstyle": "round,pad=0.35",
                  "facecolor": _KIND_COLORS[node.kind.value],
                  "edgecolor": "0.3"},
        )
    ax.set_axis_off()
    ax.margins(0.15)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
