import json
import subprocess
import sys

import pytest

from pggames.cli import main
from pggames.core import Graph, cycle_graph, path_graph
from pggames.reductions import CnfFormula1in3
from pggames.solve import four_triangle_chain


@pytest.fixture
def files(tmp_path):
    out = {}
    for name, g in [("ftc", four_triangle_chain()), ("c5", cycle_graph(5)),
                    ("p5", path_graph(5)), ("p2", path_graph(2))]:
        p = tmp_path / f"{name}.graph"
        p.write_text(g.to_text())
        out[name] = str(p)
    bad = tmp_path / "bad.graph"
    bad.write_text("2 1\n0 x\n")
    out["bad"] = str(bad)
    for name, text in [("one", "p cnf 3 1\n1 2 3 0\n"), ("xxx", "p cnf 1 1\n1 1 1 0\n"),
                       ("two", "p cnf 2 1\n1 2 0\n")]:
        p = tmp_path / f"{name}.cnf"
        p.write_text(text)
        out[name] = str(p)
    out["dir"] = tmp_path
    return out


def test_solve_exit_codes(files, capsys):
    assert main(["solve", "--graph", files["ftc"], "--pattern", "101", "--method", "brute"]) == 1
    assert json.loads(capsys.readouterr().out)["status"] == "NONE"
    assert main(["solve", "--graph", files["c5"], "--pattern", "101"]) == 0
    d = json.loads(capsys.readouterr().out)
    assert d["status"] == "FOUND" and d["witness"] == "11111"
    assert main(["solve", "--graph", files["bad"], "--pattern", "101"]) == 2
    assert "malformed" in capsys.readouterr().err


def test_solve_text_and_dimacs(files, capsys):
    main(["solve", "--graph", files["c5"], "--pattern", "101", "--format", "text"])
    out = capsys.readouterr().out
    assert out.startswith("FOUND\nwitness 11111")
    assert main(["solve", "--graph", files["c5"], "--pattern", "101", "--format", "dimacs"]) == 0
    assert "p cnf" in capsys.readouterr().out


def test_verify(files, capsys):
    assert main(["verify", "--graph", files["p5"], "--pattern", "101", "--profile", "01001"]) == 0
    assert main(["verify", "--graph", files["p5"], "--pattern", "101", "--profile", "11111"]) == 1
    out = capsys.readouterr().out
    assert "node 0" in out and "1 productive" in out
    assert main(["verify", "--graph", files["p5"], "--pattern", "101", "--profile", "0100"]) == 2
    assert main(["verify", "--graph", files["p5"], "--pattern", "101", "--profile", "00000"]) == 1


def test_reduce(files, capsys):
    prefix = str(files["dir"] / "r1")
    assert main(["reduce", "--cnf", files["one"], "--out", prefix]) == 0
    assert Graph.parse(open(prefix + ".graph").read()).n == 21
    assert "nodes 21" in capsys.readouterr().out
    prefix = str(files["dir"] / "r3")
    assert main(["reduce", "--cnf", files["xxx"], "--out", prefix, "--format", "dot"]) == 0
    g = Graph.parse(open(prefix + ".graph").read())
    assert g.n == 61 and g.max_degree <= 6
    assert open(prefix + ".dot").read().count("subgraph cluster_") == 3
    labels = json.load(open(prefix + ".labels.json"))
    assert len(labels["labels"]) == 61
    assert main(["reduce", "--cnf", files["two"]]) == 2


def test_emitted_files_roundtrip(files):
    prefix = str(files["dir"] / "rt")
    main(["reduce", "--cnf", files["xxx"], "--out", prefix])
    text = open(prefix + ".graph").read()
    assert Graph.parse(text).to_text() == text
    f = CnfFormula1in3.parse(open(files["one"]).read())
    assert CnfFormula1in3.parse(f.to_dimacs()) == f


def test_classify(capsys):
    assert main(["classify", "--pattern", "101"]) == 0
    assert json.loads(capsys.readouterr().out)["verdict"] == "NP_COMPLETE"
    main(["classify", "--pattern", "111"])
    assert json.loads(capsys.readouterr().out)["verdict"] == "ALWAYS_TRUE"
    main(["classify", "--pattern", "1001"])
    d = json.loads(capsys.readouterr().out)
    assert d["valid"] and d["chain"][-1]["base"] == "THM2_ISOLATED_ODD"
    assert main(["classify", "--pattern", "10a"]) == 2


def test_gadget(capsys):
    assert main(["gadget", "negation", "--format", "dot"]) == 0
    dot = capsys.readouterr().out
    assert dot.count("[label=") == 9 and 'label="t2", style=filled' in dot
    assert main(["gadget", "add1", "--m", "2"]) == 0
    assert json.loads(capsys.readouterr().out)["n"] == 23
    assert main(["gadget", "force1", "--m", "2", "--format", "text"]) == 0
    assert Graph.parse(capsys.readouterr().out).n == 16
    assert main(["gadget", "nope"]) == 2
    assert main(["gadget", "force1", "--m", "0"]) == 2


def test_dynamics(files, capsys):
    assert main(["dynamics", "--graph", files["p2"], "--pattern", "11"]) == 0
    d = json.loads(capsys.readouterr().out)
    assert d["terminal"] == "FIXPOINT" and d["num_steps"] == 2 and d["final"] == "11"
    assert main(["dynamics", "--graph", files["ftc"], "--pattern", "101", "--cap", "50"]) == 1


def test_selftest(capsys):
    assert main(["selftest"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[-1] == "ALL PASS" and all(line.startswith("PASS") for line in out[:-1])


def test_experiment_json_is_byte_identical(capsys):
    main(["experiment", "shift", "--seed", "3", "--trials", "4"])
    a = capsys.readouterr().out
    main(["experiment", "shift", "--seed", "3", "--trials", "4"])
    assert capsys.readouterr().out == a
    assert json.loads(a)["ok"]


def test_solve_json_byte_identical_across_processes(files):
    cmd = [sys.executable, "-m", "pggames", "solve", "--graph", files["c5"], "--pattern", "101"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and b"FOUND" in a


def test_out_flag(files):
    out = files["dir"] / "v.json"
    main(["classify", "--pattern", "10001", "--out", str(out)])
    assert json.loads(out.read_text())["valid"]
