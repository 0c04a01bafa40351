"""Exhaustive equilibrium search by backtracking over node assignments.

Nodes are assigned in a fixed order, 0 before 1. For every assigned node that
must best-respond we keep the number of productive neighbours assigned so far
(``cnt``) and the number still open (``rem``); the branch dies as soon as no
count in ``[cnt, cnt + rem]`` maps to the node's value. A node whose whole
neighbourhood is assigned is therefore checked exactly.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import islice, product
from typing import Iterator, Mapping, Sequence

from ..core import CapExceededError, Graph, Pattern, PggInstance, Profile

DEFAULT_CAP = 26


@dataclass
class SearchStats:
    nodes: int = 0


@dataclass
class _Search:
    graph: Graph
    pattern: Pattern
    order: Sequence[int]
    checked: Sequence[bool]
    fixed: Mapping[int, int] = field(default_factory=dict)
    nontrivial: bool = False
    stats: SearchStats = field(default_factory=SearchStats)

    def __post_init__(self):
        maxdeg = self.graph.max_degree
        # ones[k] = number of 1-entries among T[0..k-1]
        ones = [0]
        for k in range(maxdeg + 1):
            ones.append(ones[-1] + self.pattern[k])
        self.ones = ones

    def _ok(self, s: int, lo: int, hi: int) -> bool:
        n1 = self.ones[hi + 1] - self.ones[lo]
        return n1 > 0 if s else n1 < hi - lo + 1

    def run(self) -> Iterator[list[int]]:
        n = self.graph.n
        adj = self.graph.adjacency
        val = [-1] * n
        cnt = [0] * n
        rem = [len(a) for a in adj]
        order = list(self.order)
        checked = self.checked
        fixed = self.fixed
        stats = self.stats
        ok = self._ok
        nontrivial = self.nontrivial
        depth_end = len(order)

        def consistent(v: int) -> bool:
            if checked[v] and not ok(val[v], cnt[v], cnt[v] + rem[v]):
                return False
            for u in adj[v]:
                if val[u] >= 0 and checked[u] and not ok(val[u], cnt[u], cnt[u] + rem[u]):
                    return False
            return True

        def rec(depth: int, nones: int) -> Iterator[list[int]]:
            if depth == depth_end:
                if not nontrivial or nones:
                    yield list(val)
                return
            v = order[depth]
            choices = (fixed[v],) if v in fixed else (0, 1)
            last = depth == depth_end - 1
            for b in choices:
                if last and nontrivial and b == 0 and nones == 0:
                    continue
                stats.nodes += 1
                val[v] = b
                for u in adj[v]:
                    rem[u] -= 1
                    cnt[u] += b
                if consistent(v):
                    yield from rec(depth + 1, nones + b)
                for u in adj[v]:
                    rem[u] += 1
                    cnt[u] -= b
                val[v] = -1

        yield from rec(0, 0)


def iter_consistent(
    graph: Graph,
    pattern: Pattern,
    *,
    checked: Sequence[bool] | None = None,
    fixed: Mapping[int, int] | None = None,
    order: Sequence[int] | None = None,
    nontrivial: bool = False,
    stats: SearchStats | None = None,
) -> Iterator[list[int]]:
    """Yield every assignment in which all ``checked`` nodes best-respond.

    Unchecked nodes are free inputs. With the default node order the output is
    lexicographic (node 0 most significant).
    """
    n = graph.n
    if order is None:
        order = range(n)
    if sorted(order) != list(range(n)):
        raise ValueError("order must be a permutation of the nodes")
    s = _Search(
        graph,
        pattern,
        order,
        [True] * n if checked is None else list(checked),
        dict(fixed or {}),
        nontrivial,
        stats if stats is not None else SearchStats(),
    )
    return s.run()


def _check_cap(inst: PggInstance, cap: int):
    if inst.n > cap:
        raise CapExceededError(f"{inst.n} nodes exceed the exhaustive cap of {cap}")


def _enumerate_prefix(args) -> list[Profile]:
    inst, prefix, limit = args
    fixed = dict(enumerate(prefix))
    it = iter_consistent(inst.graph, inst.pattern, fixed=fixed, nontrivial=True)
    return [tuple(p) for p in islice(it, limit)]


def enumerate_ntpne(
    inst: PggInstance,
    limit: int | None = None,
    *,
    cap: int = DEFAULT_CAP,
    split: int = 0,
    workers: int = 1,
    stats: SearchStats | None = None,
) -> list[Profile]:
    """Up to ``limit`` non-trivial PNEs in lexicographic order.

    ``split`` partitions the search on the values of the first ``split``
    nodes; the parts are solved independently (in a process pool when
    ``workers > 1``) and concatenated in prefix order, so the result does not
    depend on the partitioning.
    """
    _check_cap(inst, cap)
    if limit is not None and limit < 1:
        raise ValueError("limit must be >= 1")
    split = min(split, inst.n)
    if split == 0:
        it = iter_consistent(inst.graph, inst.pattern, nontrivial=True, stats=stats)
        return [tuple(p) for p in islice(it, limit)]
    jobs = [(inst, prefix, limit) for prefix in product((0, 1), repeat=split)]
    out: list[Profile] = []
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            for part in pool.map(_enumerate_prefix, jobs):
                out += part
    else:
        for job in jobs:
            out += _enumerate_prefix(job)
            if limit is not None and len(out) >= limit:
                break
    return out[:limit] if limit is not None else out


def first_ntpne(
    inst: PggInstance, *, cap: int = DEFAULT_CAP, stats: SearchStats | None = None
) -> Profile | None:
    found = enumerate_ntpne(inst, 1, cap=cap, stats=stats)
    return found[0] if found else None


def enumerate_pne(inst: PggInstance, *, cap: int = DEFAULT_CAP) -> list[Profile]:
    """All PNEs, the all-zero profile included when it qualifies."""
    _check_cap(inst, cap)
    return [tuple(p) for p in iter_consistent(inst.graph, inst.pattern)]
