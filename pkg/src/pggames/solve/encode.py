"""Propositional encoding of the non-trivial equilibrium condition.

Node ``i`` gets decision variable ``i + 1``. For each node a unary sequential
counter over its neighbours' variables yields literals ``ge[c]`` meaning "at
least ``c`` neighbours produce", for ``c`` up to ``D + 1`` where ``D`` is the
largest index with ``T[D] = 1``. The node variable is then tied to the
disjunction of the exact counts ``k`` with ``T[k] = 1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..core import PggInstance, Profile
from .sat import to_dimacs


@dataclass
class CnfEncoding:
    num_vars: int
    clauses: list[list[int]]
    varmap: list[int]
    aux: dict[int, list[int]] = field(default_factory=dict)

    def decode(self, model: list[int]) -> Profile:
        return tuple(model[v] for v in self.varmap)

    def to_dimacs(self) -> str:
        comments = ["non-trivial pure Nash equilibrium encoding"]
        comments += [f"node {i} var {v}" for i, v in enumerate(self.varmap)]
        return to_dimacs(self.num_vars, self.clauses, comments)


class _Builder:
    def __init__(self, n: int):
        self.num_vars = n
        self.clauses: list[list[int]] = []

    def new(self) -> int:
        self.num_vars += 1
        return self.num_vars

    def add(self, *lits: int):
        self.clauses.append(list(lits))


def _counter(b: _Builder, xs: list[int], top: int) -> list[int | None]:
    """Literals ge[1..top] over ``xs`` (index 0 unused); None means false."""
    prev: dict[int, int] = {1: xs[0]}
    for j in range(2, len(xs) + 1):
        x = xs[j - 1]
        cur: dict[int, int] = {}
        for c in range(1, min(j, top) + 1):
            a = prev.get(c)
            r = b.new()
            if c == 1:
                # r <-> a | x
                b.add(-a, r)
                b.add(-x, r)
                b.add(-r, a, x)
            elif a is None:
                # r <-> prev[c-1] & x
                p = prev[c - 1]
                b.add(-p, -x, r)
                b.add(-r, p)
                b.add(-r, x)
            else:
                # r <-> a | (prev[c-1] & x)
                p = prev[c - 1]
                b.add(-a, r)
                b.add(-p, -x, r)
                b.add(-r, a, p)
                b.add(-r, a, x)
            cur[c] = r
        prev = cur
    return [None] + [prev.get(c) for c in range(1, top + 1)]


def encode_ntpne_cnf(inst: PggInstance) -> CnfEncoding:
    G, T = inst.graph, inst.pattern
    n = G.n
    D = T.max_one
    b = _Builder(n)
    aux: dict[int, list[int]] = {}
    for i in range(n):
        s = i + 1
        first_aux = b.num_vars + 1
        xs = [j + 1 for j in G.adjacency[i]]
        d = len(xs)
        allowed = [k for k in range(min(d, D) + 1) if T[k]]
        if not allowed:
            b.add(-s)
        elif d == 0:
            b.add(s)
        else:
            top = min(d, D + 1)
            ge = _counter(b, xs, top)
            exact = []
            for k in allowed:
                if k == 0:
                    exact.append(-ge[1])
                elif k == d:
                    exact.append(ge[k])
                else:
                    e = b.new()
                    b.add(-e, ge[k])
                    b.add(-e, -ge[k + 1])
                    b.add(-ge[k], ge[k + 1], e)
                    exact.append(e)
            b.add(-s, *exact)
            for e in exact:
                b.add(-e, s)
        aux[i] = list(range(first_aux, b.num_vars + 1))
    b.add(*range(1, n + 1))
    return CnfEncoding(b.num_vars, b.clauses, list(range(1, n + 1)), aux)
