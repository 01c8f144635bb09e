"""Graphviz DOT rendering of an eigenfunction's sign pattern."""

from __future__ import annotations

from .graph_core import WeightedGraph
from .nodal import SignVector

FILL = {1: "#ef8a62", -1: "#67a9cf", 0: "#f7f7f7"}


def to_dot(g: WeightedGraph, f, signs: SignVector, title: str = "nodal") -> str:
    """Undirected DOT text: nodes labelled ``x: f(x)`` and filled by sign, edges by weight.

    Vertices classified as zero are labelled 0.
    """
    lines = [
        f"graph {title} {{",
        "  rankdir=TB;",
        '  node [shape=circle, style=filled, fontname="Helvetica"];',
    ]
    for x in range(g.n):
        value = 0.0 if signs.signs[x] == 0 else float(f[x])
        label = f"{x}: {value:.6g}"
        lines.append(f'  {x} [label="{label}", fillcolor="{FILL[signs.signs[x]]}"];')
    for u, v, w in g.edges:
        lines.append(f'  {u} -- {v} [label="{w:.6g}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
