"""Acceptance criteria, one test each, with their runtime budgets.

Every test prints a single ``PASS``/``FAIL`` line. Run this file directly
(``python tests/test_acceptance.py``) to get just those lines.
"""

import sys
import time

import pytest

from pggames.core import ZERO_OR_TWO, PggInstance, is_ntpne
from pggames.experiments import (
    classifier_batch,
    crossval_batch,
    double_batch,
    one_in_three_batch,
    shift_batch,
)
from pggames.gadgets import (
    SEMI_SHARP_ODD3,
    add1_contract,
    add1_gadget,
    clause_contract,
    clause_gadget,
    copy_contract,
    copy_gadget,
    force1_contract,
    force1_gadget,
    negation_contract,
    negation_gadget,
    port_restrictions,
    verify_gadget_contract,
)
from pggames.solve import build_cycle_pne, build_path_pne, enumerate_pne, four_triangle_chain
from pggames.solve.brute import SearchStats, iter_consistent

SWEEP_LIMIT = 2 ** 22


def _contracts(items):
    lines, ok, explored = [], True, []
    for g, T, c in items:
        rep = verify_gadget_contract(g, T, c)
        ok = ok and rep.passed
        explored.append(rep.explored)
        lines += [ln for ln in rep.lines() if ln.startswith("FAIL")]
    return ok, explored, lines


def crit_gadget_contracts():
    g = clause_gadget()
    st = SearchStats()
    restr = {tuple(s[:3]) for s in iter_consistent(g.graph, ZERO_OR_TWO, stats=st)}
    exact = restr == {(1, 0, 0), (0, 1, 0), (0, 0, 1)}
    ok, explored, fails = _contracts([
        (g, ZERO_OR_TWO, clause_contract()),
        (negation_gadget(), ZERO_OR_TWO, negation_contract()),
        (copy_gadget(), ZERO_OR_TWO, copy_contract()),
    ])
    sweeps = [st.nodes] + explored
    ok = ok and exact and max(sweeps) <= SWEEP_LIMIT
    return ok, f"clause literal set {sorted(restr)}; largest sweep {max(sweeps)} nodes {fails}"


def crit_force_add():
    f, a = force1_gadget(1), add1_gadget(1)
    ok, _, fails = _contracts([
        (f, SEMI_SHARP_ODD3, force1_contract(1)),
        (a, SEMI_SHARP_ODD3, add1_contract(1)),
    ])
    vs = port_restrictions(a, SEMI_SHARP_ODD3, ("v", "b"), a.hooks)
    ok = ok and vs == {(0, 1), (1, 1)}
    return ok, f"add-1 (v, b) over all PNEs: {sorted(vs)} {fails}"


def crit_batch(rep):
    return rep.ok, f"{rep.agreed}/{rep.trials} {rep.failures[:3]}"


def crit_constructions():
    paths = all(is_ntpne(*build_path_pne(n)) for n in range(2, 10_001))
    cycles = all(is_ntpne(*build_cycle_pne(n)) for n in range(3, 10_001))
    g = four_triangle_chain()
    none = enumerate_pne(PggInstance(g, ZERO_OR_TWO)) == [] and (g.n, g.m) == (9, 12)
    return paths and cycles and none, f"paths {paths}, cycles {cycles}, chain has no PNE {none}"


CRITERIA = [
    ("1 gadget contract suite", 60, crit_gadget_contracts),
    ("2 force-1 / add-1 suite", 30, crit_force_add),
    ("3 one-in-three end-to-end 200", 300, lambda: crit_batch(one_in_three_batch(0, 200))),
    ("4 double-pattern equivalence 500", 600, lambda: crit_batch(double_batch(0, 500))),
    ("5 shift family equivalence 50", 600, lambda: crit_batch(shift_batch(0, 50))),
    ("6 structured constructions", 10, crit_constructions),
    ("7 classifier totality/consistency", 300, lambda: crit_batch(classifier_batch(0, 20, 10))),
    ("8 solver cross-validation 3000", 600, lambda: crit_batch(crossval_batch(0, 300, 12))),
]


def run(name, limit, fn):
    t0 = time.perf_counter()
    ok, detail = fn()
    dt = time.perf_counter() - t0
    passed = ok and dt < limit
    line = f"{'PASS' if passed else 'FAIL'} criterion {name}: {detail} ({dt:.1f}s, budget {limit}s)"
    return passed, ok, dt, line


@pytest.mark.parametrize("name,limit,fn", CRITERIA, ids=[c[0].split()[0] for c in CRITERIA])
def test_criterion(name, limit, fn, capsys):
    passed, ok, dt, line = run(name, limit, fn)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line
    assert dt < limit, line


if __name__ == "__main__":
    results = [run(*c) for c in CRITERIA]
    for r in results:
        print(r[3], flush=True)
    sys.exit(0 if all(r[0] for r in results) else 1)
