"""Hardness gadgets as ported subgraphs, with an exhaustive contract checker.

A gadget only talks to the rest of a graph through its ports. Its guarantees are
checked by attaching free external "hook" nodes to the ports, enumerating
every assignment in which all gadget nodes best-respond, and testing the
requirement on each.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Callable, Mapping, Sequence

from .core import ZERO_OR_TWO, CapExceededError, Graph, Pattern, PggError, Profile
from .solve.brute import DEFAULT_CAP, SearchStats, iter_consistent
from .solve.constructions import triangle_chain

SEMI_SHARP_ODD3 = Pattern((1, 0, 0, 1))


@dataclass(frozen=True)
class PortedSubgraph:
    name: str
    graph: Graph
    names: tuple[str, ...]
    ports: Mapping[str, int]
    # external nodes used by the contracts, as (hook name, port name)
    hooks: tuple[tuple[str, str], ...] = ()
    # meaning of each position of a witness-table key (hook or node names)
    witness_keys: tuple[str, ...] = ()
    witness_table: Mapping[tuple[int, ...], Profile] = field(default_factory=dict)
    pattern: Pattern = ZERO_OR_TWO

    def __post_init__(self):
        if len(self.names) != self.graph.n or len(set(self.names)) != self.graph.n:
            raise PggError("gadget node names must be unique, one per node")
        for p, u in self.ports.items():
            if not 0 <= u < self.graph.n:
                raise PggError(f"port {p} points outside the gadget")
        for key, w in self.witness_table.items():
            if not self.witness_holds(key, w):
                raise PggError(f"{self.name} witness for {key} fails the best-response check")

    @property
    def n(self) -> int:
        return self.graph.n

    def node(self, name: str) -> int:
        return self.names.index(name)

    def with_hooks(self, hooks: Sequence[tuple[str, str]] | None = None) -> tuple[Graph, dict[str, int]]:
        """Gadget plus one external node per hook; returns graph and name map."""
        hooks = self.hooks if hooks is None else hooks
        ids = {nm: i for i, nm in enumerate(self.names)}
        edges = list(self.graph.edges)
        n = self.n
        for hname, port in hooks:
            if hname in ids:
                raise PggError(f"hook name {hname} clashes with a gadget node")
            ids[hname] = n
            edges.append((self.ports[port], n))
            n += 1
        return Graph.from_edges(n, edges), ids

    def witness_holds(self, key: Sequence[int], witness: Sequence[int]) -> bool:
        g, ids = self.with_hooks()
        s = list(witness) + [0] * len(self.hooks)
        for nm, b in zip(self.witness_keys, key):
            s[ids[nm]] = b
        if tuple(s[ids[nm]] for nm in self.witness_keys) != tuple(key):
            return False
        T = self.pattern
        adj = g.adjacency
        return all(s[u] == T[sum(s[j] for j in adj[u])] for u in range(self.n))

    def assignment(self, values: Mapping[str, int]) -> Profile:
        """Full gadget profile from a name -> value map (missing names are 0)."""
        return tuple(int(values.get(nm, 0)) for nm in self.names)

    def to_dot(self) -> str:
        port_ids = {u: p for p, u in self.ports.items()}
        lines = [f"graph {self.name} {{"]
        for u, nm in enumerate(self.names):
            if u in port_ids:
                lines.append(f'  {u} [label="{nm}", style=filled, fillcolor=gold, xlabel="port {port_ids[u]}"];')
            else:
                lines.append(f'  {u} [label="{nm}"];')
        lines += [f"  {u} -- {v};" for u, v in self.graph.edges]
        lines.append("}")
        return "\n".join(lines) + "\n"

    def witness_json(self) -> str:
        table = {
            ",".join(f"{k}={b}" for k, b in zip(self.witness_keys, key)):
                {nm: w[i] for i, nm in enumerate(self.names)}
            for key, w in self.witness_table.items()
        }
        return json.dumps({"gadget": self.name, "pattern": str(self.pattern),
                           "witness_keys": list(self.witness_keys), "witnesses": table},
                          indent=2, sort_keys=True)


def clause_gadget() -> PortedSubgraph:
    names = ["l1", "l2", "l3"]
    for i in (1, 2, 3):
        names += [f"{r}{i}" for r in "xyabcd"]
    ids = {nm: k for k, nm in enumerate(names)}
    edges = [(0, 1), (0, 2), (1, 2)]
    for i in (1, 2, 3):
        l, x, y = ids[f"l{i}"], ids[f"x{i}"], ids[f"y{i}"]
        a, b, c, d = (ids[f"{r}{i}"] for r in "abcd")
        edges += [(l, x), (l, y), (x, y), (x, a), (x, b), (a, b), (y, c), (y, d), (c, d)]
    graph = Graph.from_edges(21, edges)
    table = {}
    for on in (1, 2, 3):
        vals = {}
        for i in (1, 2, 3):
            if i == on:
                vals.update({f"l{i}": 1, f"x{i}": 1, f"y{i}": 1})
            else:
                vals.update({f"a{i}": 1, f"c{i}": 1})
        key = tuple(int(i == on) for i in (1, 2, 3))
        table[key] = tuple(vals.get(nm, 0) for nm in names)
    return PortedSubgraph("clause", graph, tuple(names), {"l1": 0, "l2": 1, "l3": 2},
                          witness_keys=("l1", "l2", "l3"), witness_table=table)


def negation_gadget() -> PortedSubgraph:
    names = tuple([f"b{i}" for i in range(1, 6)] + [f"t{i}" for i in range(1, 5)])
    graph = triangle_chain(4)
    w = tuple(int(nm in ("t1", "b4")) for nm in names)
    return PortedSubgraph("negation", graph, names, {"t2": names.index("t2")},
                          hooks=(("u", "t2"), ("v", "t2")), witness_keys=("u", "v"),
                          witness_table={(1, 0): w, (0, 1): w})


def copy_gadget() -> PortedSubgraph:
    ng = negation_gadget()
    names = [f"ng1.{nm}" for nm in ng.names] + [f"ng2.{nm}" for nm in ng.names] + ["x", "y"]
    edges = list(ng.graph.edges) + [(u + 9, v + 9) for u, v in ng.graph.edges]
    t2 = ng.node("t2")
    x, y = 18, 19
    edges += [(x, y), (x, t2), (x, t2 + 9)]
    graph = Graph.from_edges(20, edges)
    base = ng.witness_table[(1, 0)]
    table = {
        (0, 0): base + base + (1, 0),
        (1, 1): base + base + (0, 1),
    }
    return PortedSubgraph("copy", graph, tuple(names), {"u_hook": t2, "v_hook": t2 + 9},
                          hooks=(("u", "u_hook"), ("v", "v_hook")), witness_keys=("u", "v"),
                          witness_table=table)


def _force1_parts(m: int) -> tuple[list[str], list[tuple[int, int]]]:
    names = ["x", "y", "z"]
    edges = [(0, 1), (0, 2), (1, 2)]
    for hub, cnt in ((0, 2 * m + 1), (1, 2 * m), (2, 2 * m)):
        for k in range(cnt):
            names.append(f"a{names[hub]}{k}")
            edges.append((hub, len(names) - 1))
    return names, edges


def isolated_odd_pattern(m: int) -> Pattern:
    """Smallest semi-sharp pattern with an isolated 1 at index ``2m + 1``."""
    return Pattern((1,) + (0,) * (2 * m) + (1,))


def force1_gadget(m: int, pattern: Pattern | None = None) -> PortedSubgraph:
    if m < 1:
        raise ValueError("force-1 gadget needs m >= 1")
    names, edges = _force1_parts(m)
    graph = Graph.from_edges(len(names), edges)
    w = tuple(int(nm.startswith("a") and nm != "ax0") for nm in names)
    return PortedSubgraph(f"force1_m{m}", graph, tuple(names), {"a": names.index("ax0")},
                          hooks=(("u", "a"),), witness_keys=("u",), witness_table={(1,): w},
                          pattern=pattern or isolated_odd_pattern(m))


def add1_gadget(m: int, pattern: Pattern | None = None) -> PortedSubgraph:
    if m < 1:
        raise ValueError("add-1 gadget needs m >= 1")
    k = m + 1
    xs = list(range(k))
    ys = list(range(k, 2 * k))
    b = 2 * k
    names = [f"x{i + 1}" for i in range(k)] + [f"y{i + 1}" for i in range(k)] + ["b"]
    edges = []
    for i in range(k):
        for j in range(i + 1, k):
            edges += [(xs[i], xs[j]), (ys[i], ys[j])]
        for j in range(k):
            # x_i -- y_j everywhere except the pairs x_i, y_i with i >= 2
            if i != j or i == 0:
                edges.append((xs[i], ys[j]))
    for i in range(1, k):
        edges += [(b, xs[i]), (b, ys[i])]
    fnames, fedges = _force1_parts(m)
    off = len(names)
    names += [f"f.{nm}" for nm in fnames]
    edges += [(u + off, v + off) for u, v in fedges]
    edges.append((b, off + fnames.index("ax0")))
    graph = Graph.from_edges(len(names), edges)
    fw = force1_gadget(m).witness_table[(1,)]
    base = {"b": 1}
    base.update({f"f.{nm}": fw[i] for i, nm in enumerate(fnames)})
    v0 = dict(base, x1=1)
    v1 = dict(base, **{nm: 1 for nm in names[: 2 * k]})
    table = {(0,): tuple(v0.get(nm, 0) for nm in names),
             (1,): tuple(v1.get(nm, 0) for nm in names)}
    return PortedSubgraph(f"add1_m{m}", graph, tuple(names), {"b": b},
                          hooks=(("v", "b"),), witness_keys=("v",), witness_table=table,
                          pattern=pattern or isolated_odd_pattern(m))


GADGETS = {
    "clause": lambda m=None: clause_gadget(),
    "negation": lambda m=None: negation_gadget(),
    "copy": lambda m=None: copy_gadget(),
    "force1": lambda m=1: force1_gadget(m),
    "add1": lambda m=1: add1_gadget(m),
}


# Contracts

Values = Mapping[str, int]


@dataclass(frozen=True)
class Requirement:
    """One checkable gadget claim.

    ``forall``: ``predicate`` holds on every assignment (restricted to
    ``condition``) in which all gadget nodes best-respond. ``exists``: some
    such assignment agrees with ``condition``.
    """

    name: str
    kind: str
    hooks: tuple[tuple[str, str], ...] = ()
    condition: Mapping[str, int] = field(default_factory=dict)
    predicate: Callable[[Values], bool] | None = None

    def __post_init__(self):
        if self.kind not in ("forall", "exists"):
            raise ValueError("kind must be 'forall' or 'exists'")
        if self.kind == "forall" and self.predicate is None:
            raise ValueError("forall requirement needs a predicate")


@dataclass(frozen=True)
class GadgetContract:
    requirements: tuple[Requirement, ...]


@dataclass
class RequirementResult:
    name: str
    kind: str
    passed: bool
    consistent: int
    violations: int = 0
    counterexample: dict[str, int] | None = None
    witness: dict[str, int] | None = None


@dataclass
class ContractReport:
    gadget: str
    pattern: str
    results: list[RequirementResult]
    explored: int = 0

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def lines(self) -> list[str]:
        out = []
        for r in self.results:
            tag = "PASS" if r.passed else "FAIL"
            extra = f" counterexample={r.counterexample}" if r.counterexample else ""
            out.append(f"{tag} {self.gadget}: {r.name} ({r.consistent} consistent){extra}")
        return out


def verify_gadget_contract(g: PortedSubgraph, T: Pattern, c: GadgetContract,
                           cap: int = DEFAULT_CAP) -> ContractReport:
    results = []
    stats = SearchStats()
    for req in c.requirements:
        graph, ids = g.with_hooks(req.hooks)
        if graph.n > cap:
            raise CapExceededError(f"{graph.n} enumerated nodes exceed the cap of {cap}")
        names = sorted(ids, key=ids.get)
        checked = [u < g.n for u in range(graph.n)]
        fixed = {ids[k]: v for k, v in req.condition.items()}
        total = violations = 0
        first_bad = found = None
        for s in iter_consistent(graph, T, checked=checked, fixed=fixed, stats=stats):
            total += 1
            vals = dict(zip(names, s))
            if req.kind == "exists":
                found = vals
                break
            if not req.predicate(vals):
                violations += 1
                if first_bad is None:
                    first_bad = vals
        if req.kind == "exists":
            results.append(RequirementResult(req.name, req.kind, found is not None, total, witness=found))
        else:
            results.append(RequirementResult(req.name, req.kind, violations == 0, total,
                                             violations, first_bad))
    return ContractReport(g.name, str(T), results, stats.nodes)


def port_restrictions(g: PortedSubgraph, T: Pattern, ports: Sequence[str],
                      hooks: Sequence[tuple[str, str]] = ()) -> set[tuple[int, ...]]:
    """Values taken by ``ports`` over all assignments where gadget nodes best-respond."""
    graph, ids = g.with_hooks(hooks)
    checked = [u < g.n for u in range(graph.n)]
    return {tuple(s[ids[p]] for p in ports) for s in iter_consistent(graph, T, checked=checked)}


def _witness_condition(g: PortedSubgraph, key: tuple[int, ...]) -> dict[str, int]:
    cond = dict(zip(g.names, g.witness_table[key]))
    cond.update(zip(g.witness_keys, key))
    return cond


def clause_contract() -> GadgetContract:
    ext = tuple((f"e{i}", f"l{i}") for i in (1, 2, 3))
    reqs = []
    for i in (1, 2, 3):
        others = [j for j in (1, 2, 3) if j != i]
        reqs.append(Requirement(
            f"l{i}=1 forces x{i}=y{i}=1", "forall", ext,
            predicate=lambda v, i=i: v[f"l{i}"] == 0 or (v[f"x{i}"] == 1 and v[f"y{i}"] == 1)))
        reqs.append(Requirement(
            f"l{i}=1 forces the other literals to 0", "forall", ext,
            predicate=lambda v, i=i, o=others: v[f"l{i}"] == 0 or all(v[f"l{j}"] == 0 for j in o)))
    g = clause_gadget()
    for key in sorted(g.witness_table):
        reqs.append(Requirement(f"literals {''.join(map(str, key))} complete (stored witness)",
                                "exists", (), _witness_condition(g, key)))
    reqs.append(Requirement(
        "isolated literals are never all 0", "forall",
        predicate=lambda v: v["l1"] + v["l2"] + v["l3"] > 0))
    reqs.append(Requirement(
        "isolated literals have exactly one 1", "forall",
        predicate=lambda v: v["l1"] + v["l2"] + v["l3"] == 1))
    return GadgetContract(tuple(reqs))


def negation_contract() -> GadgetContract:
    g = negation_gadget()
    hooks = g.hooks
    reqs = [
        Requirement("u != v", "forall", hooks, predicate=lambda v: v["u"] != v["v"]),
        Requirement("t2 = 0", "forall", hooks, predicate=lambda v: v["t2"] == 0),
    ]
    for key in sorted(g.witness_table):
        reqs.append(Requirement(f"witness t1=b4=1 for u,v={key}", "exists", hooks,
                                _witness_condition(g, key)))
    return GadgetContract(tuple(reqs))


def copy_contract() -> GadgetContract:
    g = copy_gadget()
    hooks = g.hooks
    reqs = [
        Requirement("u = v", "forall", hooks, predicate=lambda v: v["u"] == v["v"]),
        Requirement("u, v get no productive neighbour from the gadget", "forall", hooks,
                    predicate=lambda v: v["ng1.t2"] == 0 and v["ng2.t2"] == 0),
    ]
    for key in sorted(g.witness_table):
        reqs.append(Requirement(f"witness for u=v={key[0]}", "exists", hooks,
                                _witness_condition(g, key)))
    return GadgetContract(tuple(reqs))


def force1_contract(m: int = 1) -> GadgetContract:
    g = force1_gadget(m)
    hooks = g.hooks
    return GadgetContract((
        Requirement("u = 1 and a = 0", "forall", hooks,
                    predicate=lambda v: v["u"] == 1 and v["ax0"] == 0),
        Requirement("witness x=y=z=0, antennas but a = 1", "exists", hooks,
                    _witness_condition(g, (1,))),
    ))


def add1_contract(m: int = 1) -> GadgetContract:
    g = add1_gadget(m)
    hooks = g.hooks
    reqs = [Requirement("bridge b = 1", "forall", hooks, predicate=lambda v: v["b"] == 1)]
    for key in sorted(g.witness_table):
        reqs.append(Requirement(f"witness for v={key[0]}", "exists", hooks,
                                _witness_condition(g, key)))
    return GadgetContract(tuple(reqs))


def standard_suite() -> list[tuple[PortedSubgraph, Pattern, GadgetContract]]:
    """Every gadget contract with the pattern it is stated for."""
    return [
        (clause_gadget(), ZERO_OR_TWO, clause_contract()),
        (negation_gadget(), ZERO_OR_TWO, negation_contract()),
        (copy_gadget(), ZERO_OR_TWO, copy_contract()),
        (force1_gadget(1), SEMI_SHARP_ODD3, force1_contract(1)),
        (add1_gadget(1), SEMI_SHARP_ODD3, add1_contract(1)),
    ]


def gadget_node_count(name: str, m: int = 1) -> int:
    """Closed-form size of each gadget."""
    return {"clause": 21, "negation": 9, "copy": 20,
            "force1": 6 * m + 4, "add1": 8 * m + 7}[name]
