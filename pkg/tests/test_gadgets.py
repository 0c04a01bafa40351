import json
from itertools import product

import pytest

from oracles import sweep_consistent
from pggames.core import ZERO_OR_TWO, Pattern, PggError
from pggames.gadgets import (
    GADGETS,
    SEMI_SHARP_ODD3,
    GadgetContract,
    Requirement,
    add1_contract,
    add1_gadget,
    clause_contract,
    clause_gadget,
    copy_gadget,
    force1_contract,
    force1_gadget,
    gadget_node_count,
    negation_contract,
    negation_gadget,
    port_restrictions,
    standard_suite,
    verify_gadget_contract,
)
from pggames.reductions.classify import isolated_odd_holds


def _sweep(g, T):
    """Oracle sweep of gadget + hooks; rows as name -> value dicts."""
    graph, ids = g.with_hooks()
    names = sorted(ids, key=ids.get)
    checked = [u < g.n for u in range(graph.n)]
    for row in sweep_consistent(graph.n, graph.edges, T.bits, checked):
        yield dict(zip(names, row.tolist()))


# -- shapes -----------------------------------------------------------------

def test_fixed_gadget_sizes():
    assert clause_gadget().n == 21
    neg = negation_gadget()
    assert (neg.n, neg.graph.m) == (9, 12)
    assert copy_gadget().n == 20


def test_literal_nodes_have_degree_four():
    g = clause_gadget()
    assert [g.graph.degree(g.ports[p]) for p in ("l1", "l2", "l3")] == [4, 4, 4]


@pytest.mark.parametrize("m", range(1, 11))
def test_parametric_sizes_match_closed_form(m):
    f, a = force1_gadget(m), add1_gadget(m)
    assert f.n == gadget_node_count("force1", m) == 6 * m + 4
    assert a.n == gadget_node_count("add1", m) == 8 * m + 7
    # triangle plus one antenna edge per antenna
    assert f.graph.m == 3 + (6 * m + 1)
    k = m + 1
    # two (m+1)-cliques, complete bipartite minus m matched pairs, bridge, force-1, link
    assert a.graph.m == 2 * (k * (k - 1) // 2) + (k * k - m) + 2 * m + f.graph.m + 1


def test_figure_sizes_for_m2():
    assert force1_gadget(2).n == 16
    assert add1_gadget(2).n == 23


@pytest.mark.parametrize("name", ["negation", "copy", "force1", "add1"])
def test_ports_are_not_adjacent(name):
    for m in (1, 2, 3):
        g = GADGETS[name](m)
        ports = set(g.ports.values())
        assert not any(u in ports and v in ports for u, v in g.graph.edges)


def test_clause_ports_form_the_literal_triangle():
    g = clause_gadget()
    assert {(0, 1), (0, 2), (1, 2)} <= set(g.graph.edges)


def test_invalid_m_rejected():
    with pytest.raises(ValueError):
        force1_gadget(0)
    with pytest.raises(ValueError):
        add1_gadget(0)


def test_witnesses_validated_at_construction():
    for g, _, _ in standard_suite():
        for key, w in g.witness_table.items():
            assert g.witness_holds(key, w)
    g = negation_gadget()
    bad = tuple(1 - b for b in g.witness_table[(1, 0)])
    assert not g.witness_holds((1, 0), bad)
    with pytest.raises(PggError):
        type(g)(g.name, g.graph, g.names, g.ports, g.hooks, g.witness_keys, {(1, 0): bad})


def test_stored_witnesses_match_described_assignments():
    neg = negation_gadget()
    w = dict(zip(neg.names, neg.witness_table[(0, 1)]))
    assert {k for k, b in w.items() if b} == {"t1", "b4"}
    cp = copy_gadget()
    assert dict(zip(cp.names, cp.witness_table[(0, 0)]))["x"] == 1
    assert dict(zip(cp.names, cp.witness_table[(1, 1)]))["y"] == 1
    a1 = add1_gadget(1)
    v0 = dict(zip(a1.names, a1.witness_table[(0,)]))
    v1 = dict(zip(a1.names, a1.witness_table[(1,)]))
    assert [v0[n] for n in ("x1", "x2", "y1", "y2", "b")] == [1, 0, 0, 0, 1]
    assert [v1[n] for n in ("x1", "x2", "y1", "y2", "b")] == [1, 1, 1, 1, 1]


# -- exhaustive behaviour, checked by the oracle sweep ----------------------

def test_clause_isolated_literal_set_by_sweep():
    g = clause_gadget()
    rows = list(sweep_consistent(21, g.graph.edges, ZERO_OR_TWO.bits, [True] * 21))
    lits = {tuple(r[:3].tolist()) for r in rows}
    assert lits == {(1, 0, 0), (0, 1, 0), (0, 0, 1)}
    assert port_restrictions(g, ZERO_OR_TWO, ("l1", "l2", "l3")) == lits


def test_clause_forcing_with_free_external_neighbours():
    g = clause_gadget()
    hooks = tuple((f"e{i}", f"l{i}") for i in (1, 2, 3))
    graph, ids = g.with_hooks(hooks)
    names = sorted(ids, key=ids.get)
    checked = [u < 21 for u in range(graph.n)]
    n_rows = 0
    for row in sweep_consistent(graph.n, graph.edges, ZERO_OR_TWO.bits, checked):
        v = dict(zip(names, row.tolist()))
        n_rows += 1
        for i in (1, 2, 3):
            if v[f"l{i}"]:
                assert v[f"x{i}"] == v[f"y{i}"] == 1
                assert sum(v[f"l{j}"] for j in (1, 2, 3)) == 1
    assert n_rows == 112


def test_negation_by_sweep():
    rows = list(_sweep(negation_gadget(), ZERO_OR_TWO))
    assert rows and all(r["u"] != r["v"] and r["t2"] == 0 for r in rows)
    assert {(r["u"], r["v"]) for r in rows} == {(0, 1), (1, 0)}


def test_copy_by_sweep():
    rows = list(_sweep(copy_gadget(), ZERO_OR_TWO))
    assert all(r["u"] == r["v"] and r["ng1.t2"] == 0 and r["ng2.t2"] == 0 for r in rows)
    assert {(r["u"], r["v"]) for r in rows} == {(0, 0), (1, 1)}


@pytest.mark.parametrize("m", [1, 2])
def test_force1_by_sweep(m):
    rows = list(_sweep(force1_gadget(m), force1_gadget(m).pattern))
    assert rows and all(r["u"] == 1 and r["ax0"] == 0 for r in rows)


def test_add1_by_sweep():
    rows = list(_sweep(add1_gadget(1), SEMI_SHARP_ODD3))
    assert all(r["b"] == 1 for r in rows)
    assert {r["v"] for r in rows} == {0, 1}


# -- the contract checker ---------------------------------------------------

def test_standard_suite_passes():
    for g, T, c in standard_suite():
        rep = verify_gadget_contract(g, T, c)
        assert rep.passed, rep.lines()


def test_contract_consistent_counts_match_sweep():
    g = negation_gadget()
    rep = verify_gadget_contract(g, ZERO_OR_TWO, negation_contract())
    assert rep.results[0].consistent == len(list(_sweep(g, ZERO_OR_TWO)))


def test_false_contract_fails_with_counterexample():
    g = negation_gadget()
    false = GadgetContract((
        Requirement("u equals v", "forall", g.hooks, predicate=lambda v: v["u"] == v["v"]),
        Requirement("u = v = 1 reachable", "exists", g.hooks, {"u": 1, "v": 1}),
    ))
    rep = verify_gadget_contract(g, ZERO_OR_TWO, false)
    assert not rep.passed
    forall, exists = rep.results
    assert not forall.passed and forall.counterexample["u"] != forall.counterexample["v"]
    assert not exists.passed and exists.witness is None
    assert any(line.startswith("FAIL") and "counterexample" in line for line in rep.lines())


def test_clause_contract_fails_under_a_wrong_pattern():
    rep = verify_gadget_contract(clause_gadget(), Pattern((1,)), clause_contract())
    assert not rep.passed


@pytest.mark.parametrize("m", [1, 2])
def test_force1_and_add1_under_every_qualifying_pattern(m):
    for bits in product((0, 1), repeat=2 * m + 4):
        T = Pattern(bits)
        if not isolated_odd_holds(T, m):
            continue
        assert verify_gadget_contract(force1_gadget(m), T, force1_contract(m)).passed
        assert verify_gadget_contract(add1_gadget(m), T, add1_contract(m)).passed


def test_requirement_validation():
    with pytest.raises(ValueError):
        Requirement("x", "sometimes")
    with pytest.raises(ValueError):
        Requirement("x", "forall")


def test_emitters():
    g = negation_gadget()
    dot = g.to_dot()
    assert dot.count("[label=") == 9 and "fillcolor=gold" in dot
    assert dot.count(" -- ") == 12
    data = json.loads(g.witness_json())
    assert data["gadget"] == "negation" and data["witness_keys"] == ["u", "v"]
