"""Closed-form equilibria for paths and cycles, and the no-equilibrium chain."""

from __future__ import annotations

from ..core import ZERO_OR_TWO, Graph, PggInstance, Profile, cycle_graph, path_graph

_PATH_BASES = {0: (0, 1, 0), 1: (1, 0, 0, 1), 2: (0, 1)}
_PATH_PERIOD = {0: (0, 1, 0), 1: (0, 0, 1), 2: (0, 0, 1)}


def build_path_pne(n: int) -> tuple[PggInstance, Profile]:
    """The n-node path under 0-or-2 with a periodic equilibrium profile."""
    if n < 2:
        raise ValueError("path needs at least 2 nodes")
    r = n % 3
    base = _PATH_BASES[r]
    reps = (n - len(base)) // 3
    profile = base + _PATH_PERIOD[r] * reps
    assert len(profile) == n
    return PggInstance(path_graph(n), ZERO_OR_TWO), profile


def build_cycle_pne(n: int) -> tuple[PggInstance, Profile]:
    if n < 3:
        raise ValueError("cycle needs at least 3 nodes")
    return PggInstance(cycle_graph(n), ZERO_OR_TWO), (1,) * n


def triangle_chain(k: int) -> Graph:
    """``k`` triangles in a row, consecutive ones sharing a single vertex.

    Bottom nodes are ``0..k`` and top node ``k + 1 + i`` closes the triangle
    over bottom nodes ``i, i + 1``.
    """
    edges = []
    for i in range(k):
        t = k + 1 + i
        edges += [(i, i + 1), (i, t), (i + 1, t)]
    return Graph.from_edges(2 * k + 1, edges)


def four_triangle_chain() -> Graph:
    return triangle_chain(4)
