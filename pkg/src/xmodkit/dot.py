"""Graphviz DOT export for groupoids."""

from __future__ import annotations

from .group_groupoids import GroupGroupoid
from .groupoids import Groupoid


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def groupoid_to_dot(G: Groupoid | GroupGroupoid, include_identities: bool = False, name: str | None = None) -> str:
    """Objects as nodes, morphisms ``d0 -> d1`` as edges labelled by index.

    Output depends only on the tables, so equal inputs give equal bytes.
    """
    if isinstance(G, GroupGroupoid):
        G = G.base
    title = name if name is not None else (G.label or "groupoid")
    lines = [f"digraph {_quote(title)} {{"]
    for x in range(G.n_obj):
        lines.append(f"  {x} [label={_quote(str(x))}];")
    identities = set(int(i) for i in G.ident)
    for m in range(G.n_mor):
        if m in identities and not include_identities:
            continue
        lines.append(f"  {int(G.d0[m])} -> {int(G.d1[m])} [label={_quote(str(m))}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def dot_counts(text: str) -> tuple[int, int]:
    """``(nodes, edges)`` in DOT text written by :func:`groupoid_to_dot`."""
    nodes = edges = 0
    for line in text.splitlines():
        line = line.strip()
        if "->" in line:
            edges += 1
        elif line.endswith("];"):
            nodes += 1
    return nodes, edges
