"""Compile ONE-IN-THREE 3SAT into a 0-or-2 equilibrium instance and back.

One clause gadget per clause. Occurrences of the same literal are chained by
copy gadgets in clause order; when a variable occurs with both signs, one
negation gadget joins the last positive occurrence to the last negative one.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Sequence

from ..core import ZERO_OR_TWO, Graph, PggError, PggInstance, Profile, is_ntpne
from ..gadgets import PortedSubgraph, clause_gadget, copy_gadget, negation_gadget
from .formula import CnfFormula1in3

MAX_DEGREE = 6


@dataclass(frozen=True)
class NodeLabel:
    gadget: str
    index: int
    role: str
    var: int | None = None
    occurrence: int | None = None

    def to_dict(self) -> dict:
        return {"gadget": self.gadget, "index": self.index, "role": self.role,
                "var": self.var, "occurrence": self.occurrence}


@dataclass(frozen=True)
class GadgetUse:
    kind: str
    index: int
    offset: int
    # external literal nodes, in the gadget's witness-key order
    attached: tuple[int, ...]


@dataclass
class LabelMap:
    num_vars: int
    labels: list[NodeLabel]
    literal_nodes: dict[int, list[tuple[int, bool]]]
    gadgets: list[GadgetUse] = field(default_factory=list)

    def literal_of(self) -> dict[int, tuple[int, bool]]:
        return {node: (var, pos) for var, occ in self.literal_nodes.items() for node, pos in occ}

    def count(self, kind: str) -> int:
        return sum(g.kind == kind for g in self.gadgets)

    def to_dict(self) -> dict:
        return {
            "num_vars": self.num_vars,
            "labels": [lb.to_dict() for lb in self.labels],
            "literal_nodes": {str(v): [[n, pos] for n, pos in occ]
                              for v, occ in sorted(self.literal_nodes.items())},
            "gadgets": [{"kind": g.kind, "index": g.index, "offset": g.offset,
                         "attached": list(g.attached)} for g in self.gadgets],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=1, sort_keys=True)

    @classmethod
    def from_dict(cls, d: dict) -> "LabelMap":
        return cls(
            d["num_vars"],
            [NodeLabel(**lb) for lb in d["labels"]],
            {int(v): [(n, bool(p)) for n, p in occ] for v, occ in d["literal_nodes"].items()},
            [GadgetUse(g["kind"], g["index"], g["offset"], tuple(g["attached"])) for g in d["gadgets"]],
        )


_TEMPLATES: dict[str, PortedSubgraph] = {}


def _template(kind: str) -> PortedSubgraph:
    if kind not in _TEMPLATES:
        _TEMPLATES[kind] = {"clause": clause_gadget, "copy": copy_gadget,
                            "negation": negation_gadget}[kind]()
    return _TEMPLATES[kind]


def reduce_1in3_to_pgg(f: CnfFormula1in3) -> tuple[PggInstance, LabelMap]:
    labels: list[NodeLabel] = []
    edges: list[tuple[int, int]] = []
    uses: list[GadgetUse] = []
    counters = {"clause": 0, "copy": 0, "negation": 0}

    def place(kind: str, var=None, occurrence=None) -> tuple[PortedSubgraph, int]:
        g = _template(kind)
        off = len(labels)
        idx = counters[kind]
        counters[kind] += 1
        labels.extend(NodeLabel(kind, idx, nm, var, occurrence) for nm in g.names)
        edges.extend((u + off, v + off) for u, v in g.graph.edges)
        return g, off

    literal_nodes: dict[int, list[tuple[int, bool]]] = {}
    for c, clause in enumerate(f.clauses):
        g, off = place("clause")
        lits = []
        for p, (var, pos) in enumerate(clause):
            node = off + g.ports[f"l{p + 1}"]
            labels[node] = NodeLabel("clause", c, f"l{p + 1}", var, len(literal_nodes.get(var, [])))
            literal_nodes.setdefault(var, []).append((node, pos))
            lits.append(node)
        uses.append(GadgetUse("clause", c, off, tuple(lits)))

    for var in sorted(literal_nodes):
        occ = literal_nodes[var]
        ends = {}
        for sign in (True, False):
            chain = [node for node, pos in occ if pos == sign]
            for k in range(len(chain) - 1):
                g, off = place("copy", var, k)
                u, v = chain[k], chain[k + 1]
                edges += [(u, off + g.ports["u_hook"]), (v, off + g.ports["v_hook"])]
                uses.append(GadgetUse("copy", counters["copy"] - 1, off, (u, v)))
            if chain:
                ends[sign] = chain[-1]
        if len(ends) == 2:
            g, off = place("negation", var)
            t2 = off + g.ports["t2"]
            u, v = ends[True], ends[False]
            edges += [(u, t2), (v, t2)]
            uses.append(GadgetUse("negation", counters["negation"] - 1, off, (u, v)))

    graph = Graph.from_edges(len(labels), edges)
    if graph.max_degree > MAX_DEGREE:
        raise PggError(f"reduced graph has degree {graph.max_degree} > {MAX_DEGREE}")
    return PggInstance(graph, ZERO_OR_TWO), LabelMap(f.num_vars, labels, literal_nodes, uses)


def lift_assignment(a: Sequence[bool], lm: LabelMap) -> Profile:
    """Profile of the reduced graph built from a 1-in-3 satisfying assignment."""
    lit_of = lm.literal_of()
    n = len(lm.labels)
    s = [0] * n
    for node, (var, pos) in lit_of.items():
        s[node] = int(bool(a[var]) == pos)
    for use in lm.gadgets:
        g = _template(use.kind)
        key = tuple(s[u] for u in use.attached)
        if key not in g.witness_table:
            raise PggError(f"assignment is not exactly-one-true: {use.kind} {use.index} sees {key}")
        w = g.witness_table[key]
        for k, b in enumerate(w):
            node = use.offset + k
            if node not in lit_of:
                s[node] = b
    return tuple(s)


def extract_assignment(s: Sequence[int], lm: LabelMap, inst: PggInstance) -> tuple[bool, ...]:
    """Read the variable assignment off an NTPNE of the reduced instance."""
    if not is_ntpne(inst, s):
        raise PggError("profile is not a non-trivial PNE of the reduced instance")
    a = [False] * lm.num_vars
    for var, occ in lm.literal_nodes.items():
        node, pos = occ[0]
        a[var] = bool(s[node]) == pos
    lit_of = lm.literal_of()
    for use in lm.gadgets:
        if use.kind == "clause":
            true_lits = sum(a[lit_of[u][0]] == lit_of[u][1] for u in use.attached)
            if true_lits != 1:
                raise PggError(f"clause {use.index} has {true_lits} true literals")
    return tuple(a)
