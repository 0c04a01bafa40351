"""Seeded equivalence experiments between the reductions and the solvers.

Each batch draws its instances from ``random.Random(seed)`` only, so a seed
fully determines the instances and the outcome.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .core import Graph, Pattern, PggInstance, is_double_of, is_ntpne
from .reductions import classify, double_graph, random_formula, reduce_1in3_to_pgg, shift_family
from .reductions.classify import Verdict
from .reductions.one_in_three import MAX_DEGREE, extract_assignment
from .solve import Schedule, Terminal, br_dynamics, enumerate_ntpne, solve_ntpne

CROSSVAL_PATTERNS = tuple(Pattern.parse(s) for s in (
    "101", "1001", "111", "1", "01", "0011", "10001", "1011", "110001", "100101"))


@dataclass
class BatchReport:
    name: str
    trials: int = 0
    agreed: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.agreed == self.trials and not self.failures

    def record(self, ok: bool, what: str):
        self.trials += 1
        if ok:
            self.agreed += 1
        else:
            self.failures.append(what)

    def to_dict(self) -> dict:
        return {"name": self.name, "trials": self.trials, "agreed": self.agreed,
                "ok": self.ok, "failures": self.failures[:20]}


def random_graph(rng: random.Random, max_nodes: int, min_nodes: int = 1) -> Graph:
    n = rng.randint(min_nodes, max_nodes)
    p = rng.random()
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def random_pattern(rng: random.Random, max_len: int) -> Pattern:
    return Pattern(tuple(rng.randint(0, 1) for _ in range(rng.randint(0, max_len))))


def random_double(rng: random.Random, T: Pattern) -> Pattern:
    """A double-pattern of T with random odd entries."""
    span = 2 * max(len(T), 1) + 2
    bits = [T[k // 2] if k % 2 == 0 else rng.randint(0, 1) for k in range(span)]
    return Pattern(bits)


def one_in_three_batch(seed: int = 0, trials: int = 200) -> BatchReport:
    rng = random.Random(seed)
    rep = BatchReport("one_in_three")
    for t in range(trials):
        f = random_formula(rng, 4, 6)
        inst, lm = reduce_1in3_to_pgg(f)
        res = solve_ntpne(inst, "cnf")
        ok = res.found == f.is_satisfiable() and inst.graph.max_degree <= MAX_DEGREE
        if ok and res.found:
            ok = f.satisfied_by(extract_assignment(res.witness, lm, inst))
        rep.record(ok, f"trial {t}: {f.to_ints()}")
    return rep


def double_batch(seed: int = 0, trials: int = 500) -> BatchReport:
    rng = random.Random(seed)
    rep = BatchReport("double")
    for t in range(trials):
        G = random_graph(rng, 10)
        T = random_pattern(rng, 4)
        T2 = random_double(rng, T)
        assert is_double_of(T2, T)
        lhs = solve_ntpne(PggInstance(G, T), "brute").found
        dinst = PggInstance(double_graph(G), T2)
        eqs = enumerate_ntpne(dinst)
        n = G.n
        sym = all(s[i] == s[n + i] for s in eqs for i in range(n))
        rep.record(lhs == bool(eqs) and sym, f"trial {t}: G={G.edges} T={T} T'={T2}")
    return rep


def shift_batch(seed: int = 0, trials: int = 50) -> BatchReport:
    T = Pattern((1, 0, 0, 1))
    Tp = Pattern((0, 0, 1))
    rng = random.Random(seed)
    rep = BatchReport("shift")
    for t in range(trials):
        G = random_graph(rng, 5)
        lhs = solve_ntpne(PggInstance(G, Tp), "cnf").found
        rhs = any(solve_ntpne(PggInstance(Gj, T), "cnf").found for Gj in shift_family(G, 1))
        rep.record(lhs == rhs, f"trial {t}: G={G.edges}")
    return rep


def crossval_batch(seed: int = 0, trials: int = 300, max_nodes: int = 12) -> BatchReport:
    """``trials`` graphs, each solved under every pattern of the fixed set."""
    rng = random.Random(seed)
    rep = BatchReport("crossval")
    family = [random_graph(rng, max_nodes) for _ in range(trials)]
    for gi, G in enumerate(family):
        for T in CROSSVAL_PATTERNS:
            inst = PggInstance(G, T)
            a = solve_ntpne(inst, "brute")
            b = solve_ntpne(inst, "cnf")
            rep.record(a.found == b.found, f"graph {gi} pattern {T}")
    return rep


def dynamics_batch(seed: int = 0, trials: int = 1000, max_ones: int = 5,
                   max_nodes: int = 50, cap: int = 10**6) -> BatchReport:
    """Lowest-deviator dynamics on monotone decreasing patterns reach a PNE."""
    rng = random.Random(seed)
    rep = BatchReport("dynamics")
    for t in range(trials):
        T = Pattern((1,) * rng.randint(1, max_ones))
        G = random_graph(rng, max_nodes)
        start = tuple(rng.randint(0, 1) for _ in range(G.n))
        tr = br_dynamics(PggInstance(G, T), start, Schedule.LOWEST_DEVIATOR, cap)
        rep.record(tr.terminal is Terminal.FIXPOINT, f"trial {t}: T={T} n={G.n}")
    return rep


def classifier_batch(seed: int = 0, trials: int = 20, max_len: int = 10) -> BatchReport:
    """Totality and chain validity over all short patterns.

    Each always-true pattern is also run through dynamics on ``trials`` random graphs.
    """
    from itertools import product

    from .reductions import validate_chain

    rng = random.Random(seed)
    rep = BatchReport("classifier")
    for L in range(max_len + 1):
        for bits in product((0, 1), repeat=L):
            if L and bits[-1] == 0:
                continue
            T = Pattern(bits)
            v = classify(T)
            ok = isinstance(v.verdict, Verdict)
            if v.verdict is Verdict.NP_COMPLETE:
                ok = ok and v.chain is not None and validate_chain(T, v.chain).ok
            else:
                ok = ok and v.chain is None
            if v.verdict is Verdict.ALWAYS_TRUE:
                for _ in range(trials):
                    G = random_graph(rng, 50)
                    inst = PggInstance(G, T)
                    tr = br_dynamics(inst, (0,) * G.n, Schedule.LOWEST_DEVIATOR, 10**6)
                    ok = ok and tr.terminal is Terminal.FIXPOINT and is_ntpne(inst, tr.final)
            rep.record(ok, f"pattern {T}")
    return rep


BATCHES = {
    "one_in_three": one_in_three_batch,
    "double": double_batch,
    "shift": shift_batch,
    "crossval": crossval_batch,
    "dynamics": dynamics_batch,
    "classifier": classifier_batch,
}
