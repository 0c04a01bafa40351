"""Graph transformations behind the pattern-to-pattern reductions."""

from __future__ import annotations

from ..core import Graph
from ..gadgets import add1_gadget, force1_gadget


def double_graph(G: Graph) -> Graph:
    """Two copies of G, each node also joined to the replicas of its neighbours.

    Node ``i``'s replica is ``n + i``.
    """
    n = G.n
    edges = []
    for u, v in G.edges:
        edges += [(u, v), (n + u, n + v), (u, n + v), (v, n + u)]
    return Graph.from_edges(2 * n, edges)


def shift_graph(G: Graph, m: int, forced: int) -> Graph:
    """G plus an add-1 gadget on every node and a force-1 gadget on ``forced``.

    Layout: original nodes first, then the add-1 gadgets in node order, then
    the force-1 gadget.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    if not 0 <= forced < G.n:
        raise ValueError(f"node {forced} out of range")
    ag, fg = add1_gadget(m), force1_gadget(m)
    edges = list(G.edges)
    n = G.n
    for v in range(G.n):
        edges += [(a + n, b + n) for a, b in ag.graph.edges]
        edges.append((v, n + ag.ports["b"]))
        n += ag.n
    edges += [(a + n, b + n) for a, b in fg.graph.edges]
    edges.append((forced, n + fg.ports["a"]))
    n += fg.n
    return Graph.from_edges(n, edges)


def shift_family(G: Graph, m: int) -> list[Graph]:
    """The graphs G_1..G_n of the shift-by-one Turing reduction."""
    if m < 1:
        raise ValueError("m must be >= 1")
    return [shift_graph(G, m, j) for j in range(G.n)]
