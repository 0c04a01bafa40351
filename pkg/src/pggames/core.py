"""Patterns, graphs, profiles and the equilibrium predicates.

A pattern ``T`` maps a number of productive neighbours ``k`` to the unique
best response ``T[k]``. Patterns are finite: only a prefix is stored and every
later entry is 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

Profile = tuple[int, ...]


class PggError(Exception):
    pass


class ParseError(PggError, ValueError):
    pass


class CapExceededError(PggError):
    pass


@dataclass(frozen=True)
class Pattern:
    """Finite best-response pattern, stored without trailing zeros."""

    bits: tuple[int, ...] = ()

    def __post_init__(self):
        bits = tuple(int(b) for b in self.bits)
        if any(b not in (0, 1) for b in bits):
            raise ValueError(f"pattern entries must be 0/1, got {self.bits!r}")
        end = len(bits)
        while end and bits[end - 1] == 0:
            end -= 1
        object.__setattr__(self, "bits", bits[:end])

    @classmethod
    def parse(cls, text: str) -> "Pattern":
        text = text.strip()
        if not text or any(c not in "01" for c in text):
            raise ParseError(f"pattern must be a non-empty string over {{0,1}}: {text!r}")
        return cls(tuple(int(c) for c in text))

    def __getitem__(self, k: int) -> int:
        if k < 0:
            raise IndexError("pattern index must be >= 0")
        return self.bits[k] if k < len(self.bits) else 0

    def __len__(self):
        return len(self.bits)

    def __str__(self):
        return "".join(map(str, self.bits)) or "0"

    @property
    def max_one(self) -> int:
        """Largest index holding a 1, or -1 for the all-zero pattern."""
        return len(self.bits) - 1

    @property
    def is_zero(self) -> bool:
        return not self.bits

    def prefix(self, length: int) -> tuple[int, ...]:
        return tuple(self[k] for k in range(length))


def pattern_query(T: Pattern, k: int) -> int:
    return T[k]


def is_monotone_increasing(T: Pattern) -> bool:
    # past the stored prefix everything is 0, so a stored 1 breaks monotonicity
    return T.is_zero


def is_monotone_decreasing(T: Pattern) -> bool:
    return all(b == 1 for b in T.bits)


def is_monotone(T: Pattern) -> bool:
    return is_monotone_increasing(T) or is_monotone_decreasing(T)


def is_semi_sharp(T: Pattern) -> bool:
    return T[0] == 1 and T[1] == 0 and T[2] == 0


def is_spiked(T: Pattern) -> bool:
    return T[0] == 1 and T[1] == 0 and T[2] == 1


def classify_shape(T: Pattern) -> dict[str, bool]:
    return {
        "monotone_increasing": is_monotone_increasing(T),
        "monotone_decreasing": is_monotone_decreasing(T),
        "semi_sharp": is_semi_sharp(T),
        "spiked": is_spiked(T),
        "all_zero": T.is_zero,
    }


def shift_left(T: Pattern, t: int) -> Pattern:
    if t < 0:
        raise ValueError("shift must be >= 0")
    return Pattern(T.bits[t:])


def half_pattern(T2: Pattern) -> Pattern:
    return Pattern(T2.bits[::2])


def is_double_of(T2: Pattern, T: Pattern) -> bool:
    """True iff ``T2[2k] == T[k]`` for every k (odd entries of T2 are free)."""
    span = max(len(T), (len(T2) + 1) // 2)
    return all(T2[2 * k] == T[k] for k in range(span))


def prepend_10(T: Pattern, times: int = 1) -> Pattern:
    return Pattern((1, 0) * times + T.bits)


class Graph:
    """Simple undirected graph on nodes ``0..n-1``.

    Two views are kept: sorted adjacency tuples for the small-graph search
    code, and canonical edge arrays (``u < v``, lexicographic) for vectorized
    checks on large graphs. Either one is derived from the other on first use.
    """

    def __init__(self, n: int, adjacency: Sequence[Sequence[int]]):
        adjacency = tuple(tuple(a) for a in adjacency)
        if n < 0 or len(adjacency) != n:
            raise ValueError("adjacency must have one entry per node")
        for u, nbrs in enumerate(adjacency):
            if list(nbrs) != sorted(set(nbrs)):
                raise ValueError(f"neighbours of {u} must be sorted and distinct")
            for v in nbrs:
                if not 0 <= v < n:
                    raise ValueError(f"edge {u}-{v} leaves the node range")
                if v == u:
                    raise ValueError(f"self-loop at node {u}")
                if u not in adjacency[v]:
                    raise ValueError(f"adjacency is not symmetric at {u}-{v}")
        self.n = n
        self._adj = adjacency
        self._arrays = None

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {u}-{v} leaves the node range [0, {n})")
            if u == v:
                raise ValueError(f"self-loop at node {u}")
            if v in nbrs[u]:
                raise ValueError(f"parallel edge {u}-{v}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        g = object.__new__(cls)
        g.n, g._adj, g._arrays = n, tuple(tuple(sorted(a)) for a in nbrs), None
        return g

    @classmethod
    def from_arrays(cls, n: int, us, vs) -> "Graph":
        """Vectorized constructor from two endpoint arrays."""
        us, vs = np.asarray(us, dtype=np.int64), np.asarray(vs, dtype=np.int64)
        if us.shape != vs.shape or us.ndim != 1:
            raise ValueError("endpoint arrays must be 1-d and of equal length")
        if us.size and (min(us.min(), vs.min()) < 0 or max(us.max(), vs.max()) >= n):
            raise ValueError(f"edge leaves the node range [0, {n})")
        if np.any(us == vs):
            raise ValueError(f"self-loop at node {int(us[us == vs][0])}")
        lo, hi = np.minimum(us, vs), np.maximum(us, vs)
        key = lo * n + hi
        if key.size > 1 and not np.all(key[1:] > key[:-1]):
            order = np.argsort(key, kind="stable")
            lo, hi, key = lo[order], hi[order], key[order]
            dup = np.flatnonzero(key[1:] == key[:-1])
            if dup.size:
                k = int(dup[0])
                raise ValueError(f"parallel edge {lo[k]}-{hi[k]}")
        g = object.__new__(cls)
        g.n, g._adj, g._arrays = n, None, (lo, hi)
        return g

    @property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        if self._adj is None:
            lo, hi = self._arrays
            src = np.concatenate([lo, hi])
            dst = np.concatenate([hi, lo])
            order = np.lexsort((dst, src))
            cuts = np.cumsum(np.bincount(src, minlength=self.n))[:-1]
            self._adj = tuple(tuple(a.tolist()) for a in np.split(dst[order], cuts)) if self.n else ()
        return self._adj

    @property
    def edge_arrays(self):
        """Canonical ``(u, v)`` endpoint arrays with ``u < v``, sorted."""
        if self._arrays is None:
            e = self.edges
            self._arrays = (np.array([u for u, _ in e], dtype=np.int64),
                            np.array([v for _, v in e], dtype=np.int64))
        return self._arrays

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        if self.n != other.n:
            return False
        if self._adj is not None and other._adj is not None:
            return self._adj == other._adj
        (a, b), (c, d) = self.edge_arrays, other.edge_arrays
        return np.array_equal(a, c) and np.array_equal(b, d)

    def __hash__(self):
        return hash((self.n, self.adjacency))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"

    @property
    def edges(self) -> list[tuple[int, int]]:
        if self._adj is None:
            lo, hi = self._arrays
            return list(zip(lo.tolist(), hi.tolist()))
        return [(u, v) for u in range(self.n) for v in self._adj[u] if u < v]

    @property
    def m(self) -> int:
        if self._adj is None:
            return int(self._arrays[0].size)
        return sum(len(a) for a in self._adj) // 2

    def degree(self, u: int) -> int:
        return len(self.adjacency[u])

    @property
    def max_degree(self) -> int:
        return max((len(a) for a in self.adjacency), default=0)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with node ``u`` renamed to ``perm[u]``."""
        return Graph.from_edges(self.n, [(perm[u], perm[v]) for u, v in self.edges])

    def to_text(self) -> str:
        lines = [f"{self.n} {self.m}"]
        lines += [f"{u} {v}" for u, v in self.edges]
        return "\n".join(lines) + "\n"

    @classmethod
    def parse(cls, text: str) -> "Graph":
        lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
        lines = [ln for ln in lines if ln]
        if not lines:
            raise ParseError("empty graph file")
        try:
            n, m = (int(x) for x in lines[0].split())
        except ValueError:
            raise ParseError(f"bad header line {lines[0]!r}, expected 'n m'") from None
        if len(lines) - 1 != m:
            raise ParseError(f"header announces {m} edges, found {len(lines) - 1}")
        edges = []
        for ln in lines[1:]:
            parts = ln.split()
            if len(parts) != 2 or not all(p.isdigit() for p in parts):
                raise ParseError(f"malformed edge line {ln!r}")
            u, v = int(parts[0]), int(parts[1])
            if not u < v:
                raise ParseError(f"edge line {ln!r} must satisfy u < v")
            edges.append((u, v))
        try:
            return cls.from_edges(n, edges)
        except ValueError as exc:
            raise ParseError(str(exc)) from None


def parse_profile(text: str) -> Profile:
    text = text.strip()
    if any(c not in "01" for c in text):
        raise ParseError(f"profile must be a string over {{0,1}}: {text!r}")
    return tuple(int(c) for c in text)


def format_profile(s: Sequence[int]) -> str:
    return "".join(str(int(b)) for b in s)


@dataclass(frozen=True)
class PggInstance:
    graph: Graph
    pattern: Pattern

    @property
    def n(self) -> int:
        return self.graph.n


def productive_neighbors(G: Graph, s: Sequence[int], i: int) -> int:
    if not 0 <= i < G.n:
        raise IndexError(f"node {i} out of range [0, {G.n})")
    return sum(s[j] for j in G.adjacency[i])


def _check_length(inst: PggInstance, s: Sequence[int]):
    if len(s) != inst.n:
        raise ValueError(f"profile has length {len(s)}, graph has {inst.n} nodes")


def best_response(inst: PggInstance, s: Sequence[int], i: int) -> int:
    return inst.pattern[productive_neighbors(inst.graph, s, i)]


# Above this size the deviation check runs on the edge arrays.
VECTOR_MIN_NODES = 512


def _vector_deviators(inst: PggInstance, s: Sequence[int]) -> np.ndarray:
    lo, hi = inst.graph.edge_arrays
    try:
        # fast path for 0/1 tuples and lists
        x = np.frombuffer(bytes(s), dtype=np.uint8).astype(np.int64)
    except (TypeError, ValueError):
        x = np.asarray(s, dtype=np.int64)
    n = inst.n
    k = (np.bincount(lo, weights=x[hi], minlength=n) + np.bincount(hi, weights=x[lo], minlength=n)).astype(np.int64)
    T = inst.pattern
    table = np.array(T.bits + (0,), dtype=np.int64)
    return np.flatnonzero(x != table[np.minimum(k, len(T))])


def first_deviator(inst: PggInstance, s: Sequence[int]) -> int | None:
    """Smallest node not playing its best response, or None for a PNE."""
    _check_length(inst, s)
    if inst.n >= VECTOR_MIN_NODES:
        bad = _vector_deviators(inst, s)
        return int(bad[0]) if bad.size else None
    adj, T = inst.graph.adjacency, inst.pattern
    for i in range(inst.n):
        if s[i] != T[sum(s[j] for j in adj[i])]:
            return i
    return None


def deviators(inst: PggInstance, s: Sequence[int]) -> list[int]:
    _check_length(inst, s)
    if inst.n >= VECTOR_MIN_NODES:
        return _vector_deviators(inst, s).tolist()
    adj, T = inst.graph.adjacency, inst.pattern
    return [i for i in range(inst.n) if s[i] != T[sum(s[j] for j in adj[i])]]


def is_pne(inst: PggInstance, s: Sequence[int]) -> bool:
    return first_deviator(inst, s) is None


def is_ntpne(inst: PggInstance, s: Sequence[int]) -> bool:
    return is_pne(inst, s) and any(s)


# Small named graphs used throughout tests and the CLI.

def path_graph(n: int) -> Graph:
    i = np.arange(max(n - 1, 0))
    return Graph.from_arrays(n, i, i + 1)


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a simple cycle needs at least 3 nodes")
    i = np.arange(n)
    return Graph.from_arrays(n, i, (i + 1) % n)


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def disjoint_union(*graphs: Graph) -> tuple[Graph, list[int]]:
    """Union of graphs; returns the graph and each part's node offset."""
    offsets, edges, n = [], [], 0
    for g in graphs:
        offsets.append(n)
        edges += [(u + n, v + n) for u, v in g.edges]
        n += g.n
    return Graph.from_edges(n, edges), offsets


ZERO_OR_TWO = Pattern((1, 0, 1))
