"""A small complete SAT solver and DIMACS I/O.

Conflict-driven backtracking with two watched literals and first-UIP clause
learning. Branching is static: variables are decided in the given order and
always set to false first, with no restarts or phase saving. Every true
decision variable is then implied by earlier false decisions, so the model
returned is the lexicographically least one over the branching order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass
class SatStats:
    decisions: int = 0
    conflicts: int = 0
    propagations: int = 0


class Solver:
    def __init__(self, num_vars: int, clauses: Iterable[Sequence[int]],
                 order: Sequence[int] | None = None):
        self.num_vars = num_vars
        self.stats = SatStats()
        nv = num_vars + 1
        self.val = [-1] * nv
        self.level = [0] * nv
        self.reason: list[list[int] | None] = [None] * nv
        self.watches: list[list[list[int]]] = [[] for _ in range(2 * nv)]
        self.trail: list[int] = []
        self.trail_lim: list[int] = []
        self.qhead = 0
        self.unsat = False
        if order is None:
            order = range(1, nv)
        self.order = list(order)
        if sorted(self.order) != list(range(1, nv)):
            raise ValueError("branching order must be a permutation of the variables")
        self.pos = [0] * nv
        for i, v in enumerate(self.order):
            self.pos[v] = i
        self.next_idx = 0
        for cl in clauses:
            self._add_input(cl)

    @staticmethod
    def _lit(x: int) -> int:
        return 2 * x if x > 0 else 2 * -x + 1

    def _value(self, lit: int) -> int:
        v = self.val[lit >> 1]
        return -1 if v < 0 else v ^ (lit & 1)

    def _add_input(self, clause: Sequence[int]):
        if self.unsat:
            return
        lits = []
        for x in clause:
            if x == 0 or abs(x) > self.num_vars:
                raise ValueError(f"literal {x} out of range")
            lit = self._lit(x)
            if lit ^ 1 in lits:
                return  # tautology
            if lit not in lits:
                lits.append(lit)
        # input clauses are added at level 0 before any search
        lits = [l for l in lits if self._value(l) != 0]
        if any(self._value(l) == 1 for l in lits):
            return
        if not lits:
            self.unsat = True
        elif len(lits) == 1:
            self._enqueue(lits[0], None)
            if self._propagate() is not None:
                self.unsat = True
        else:
            self.watches[lits[0]].append(lits)
            self.watches[lits[1]].append(lits)

    def _enqueue(self, lit: int, reason):
        v = lit >> 1
        self.val[v] = (lit & 1) ^ 1
        self.level[v] = len(self.trail_lim)
        self.reason[v] = reason
        self.trail.append(lit)

    def _propagate(self):
        trail, watches, val = self.trail, self.watches, self.val
        while self.qhead < len(trail):
            p = trail[self.qhead]
            self.qhead += 1
            self.stats.propagations += 1
            false_lit = p ^ 1
            ws = watches[false_lit]
            keep = []
            i = 0
            nws = len(ws)
            while i < nws:
                c = ws[i]
                i += 1
                if c[0] == false_lit:
                    c[0], c[1] = c[1], c[0]
                first = c[0]
                fv = val[first >> 1]
                if fv >= 0 and fv ^ (first & 1) == 1:
                    keep.append(c)
                    continue
                for k in range(2, len(c)):
                    lk = c[k]
                    kv = val[lk >> 1]
                    if kv < 0 or kv ^ (lk & 1) == 1:
                        c[1], c[k] = lk, false_lit
                        watches[lk].append(c)
                        break
                else:
                    keep.append(c)
                    if fv >= 0:  # first literal is false: conflict
                        keep.extend(ws[i:])
                        watches[false_lit] = keep
                        self.qhead = len(trail)
                        return c
                    self._enqueue(first, c)
            watches[false_lit] = keep
        return None

    def _analyze(self, confl: list[int]):
        seen = self.seen
        learnt = [0]
        counter = 0
        p = -1
        idx = len(self.trail) - 1
        cur_level = len(self.trail_lim)
        touched = []
        while True:
            for q in (confl if p == -1 else confl[1:]):
                v = q >> 1
                if not seen[v] and self.level[v] > 0:
                    seen[v] = True
                    touched.append(v)
                    if self.level[v] >= cur_level:
                        counter += 1
                    else:
                        learnt.append(q)
            while not seen[self.trail[idx] >> 1]:
                idx -= 1
            p = self.trail[idx]
            idx -= 1
            confl = self.reason[p >> 1]
            seen[p >> 1] = False
            counter -= 1
            if counter == 0:
                break
        learnt[0] = p ^ 1
        for v in touched:
            seen[v] = False
        if len(learnt) == 1:
            back = 0
        else:
            best = max(range(1, len(learnt)), key=lambda j: self.level[learnt[j] >> 1])
            learnt[1], learnt[best] = learnt[best], learnt[1]
            back = self.level[learnt[1] >> 1]
        return learnt, back

    def _cancel_until(self, lvl: int):
        if len(self.trail_lim) <= lvl:
            return
        start = self.trail_lim[lvl]
        for lit in self.trail[start:]:
            v = lit >> 1
            self.val[v] = -1
            self.reason[v] = None
            if self.pos[v] < self.next_idx:
                self.next_idx = self.pos[v]
        del self.trail[start:]
        del self.trail_lim[lvl:]
        self.qhead = len(self.trail)

    def _pick(self) -> int:
        order, val = self.order, self.val
        i = self.next_idx
        while i < len(order) and val[order[i]] >= 0:
            i += 1
        self.next_idx = i
        return order[i] if i < len(order) else 0

    def solve(self) -> list[int] | None:
        """Return a model as a 0/1 list indexed by variable (index 0 unused)."""
        if self.unsat:
            return None
        self.seen = [False] * (self.num_vars + 1)
        while True:
            confl = self._propagate()
            if confl is not None:
                self.stats.conflicts += 1
                if not self.trail_lim:
                    self.unsat = True
                    return None
                learnt, back = self._analyze(confl)
                self._cancel_until(back)
                if len(learnt) == 1:
                    self._enqueue(learnt[0], None)
                else:
                    self.watches[learnt[0]].append(learnt)
                    self.watches[learnt[1]].append(learnt)
                    self._enqueue(learnt[0], learnt)
                continue
            v = self._pick()
            if v == 0:
                return [0] + [max(x, 0) for x in self.val[1:]]
            self.stats.decisions += 1
            self.trail_lim.append(len(self.trail))
            self._enqueue(2 * v + 1, None)


def solve_cnf(num_vars: int, clauses: Iterable[Sequence[int]],
              order: Sequence[int] | None = None) -> tuple[list[int] | None, SatStats]:
    s = Solver(num_vars, clauses, order)
    model = s.solve()
    return model, s.stats


def to_dimacs(num_vars: int, clauses: Sequence[Sequence[int]],
              comments: Sequence[str] = ()) -> str:
    lines = [f"c {c}" if c else "c" for c in comments]
    lines.append(f"p cnf {num_vars} {len(clauses)}")
    lines += [" ".join(map(str, cl)) + " 0" for cl in clauses]
    return "\n".join(lines) + "\n"


def parse_dimacs(text: str) -> tuple[int, list[list[int]], list[str]]:
    """Parse DIMACS CNF; returns (num_vars, clauses, comment lines)."""
    num_vars = None
    nclauses = 0
    clauses: list[list[int]] = []
    comments: list[str] = []
    cur: list[int] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("c"):
            comments.append(line[1:].strip())
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise ValueError(f"bad problem line {line!r}")
            num_vars, nclauses = int(parts[2]), int(parts[3])
            continue
        if num_vars is None:
            raise ValueError("clause before 'p cnf' header")
        for tok in line.split():
            x = int(tok)
            if x == 0:
                clauses.append(cur)
                cur = []
            else:
                if abs(x) > num_vars:
                    raise ValueError(f"literal {x} exceeds {num_vars} variables")
                cur.append(x)
    if cur:
        raise ValueError("last clause is not terminated by 0")
    if num_vars is None:
        raise ValueError("missing 'p cnf' header")
    if len(clauses) != nclauses:
        raise ValueError(f"header announces {nclauses} clauses, found {len(clauses)}")
    return num_vars, clauses, comments
