"""Command-line entry point.

Exit codes: 0 found / holds, 1 none / fails, 2 usage or input error.
JSON output is sorted and carries no timings, so equal inputs give equal bytes.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter
from pathlib import Path

from .core import (
    Graph,
    Pattern,
    PggError,
    PggInstance,
    first_deviator,
    format_profile,
    parse_profile,
    productive_neighbors,
)
from .experiments import BATCHES
from .gadgets import GADGETS, standard_suite, verify_gadget_contract
from .reductions import CnfFormula1in3, classify, reduce_1in3_to_pgg
from .reductions.one_in_three import MAX_DEGREE
from .solve import DEFAULT_CAP, Schedule, br_dynamics, encode_ntpne_cnf, solve_ntpne

EXIT_OK, EXIT_NO, EXIT_ERR = 0, 1, 2


def _emit(text: str, out: str | None):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _dump(obj) -> str:
    return json.dumps(obj, indent=1, sort_keys=True) + "\n"


def _instance(args) -> PggInstance:
    graph = Graph.parse(Path(args.graph).read_text())
    return PggInstance(graph, Pattern.parse(args.pattern))


def cmd_solve(args) -> int:
    inst = _instance(args)
    if args.format == "dimacs":
        _emit(encode_ntpne_cnf(inst).to_dimacs(), args.out)
        return EXIT_OK
    res = solve_ntpne(inst, args.method, cap=args.cap)
    if args.format == "json":
        d = res.to_dict()
        d["method"] = args.method
        _emit(_dump(d), args.out)
    else:
        lines = [res.status.value]
        if res.witness is not None:
            lines.append(f"witness {format_profile(res.witness)}")
        lines.append(" ".join(f"{k}={v:.4f}" if isinstance(v, float) else f"{k}={v}"
                              for k, v in sorted(res.stats.items())))
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK if res.found else EXIT_NO


def cmd_verify(args) -> int:
    inst = _instance(args)
    s = parse_profile(args.profile)
    if len(s) != inst.n:
        raise ValueError(f"profile has length {len(s)}, graph has {inst.n} nodes")
    dev = first_deviator(inst, s)
    if dev is not None:
        k = productive_neighbors(inst.graph, s, dev)
        print(f"NOT_PNE node {dev} plays {s[dev]} with {k} productive neighbours; "
              f"best response is {inst.pattern[k]}")
        return EXIT_NO
    if not any(s):
        print("TRIVIAL all-zero profile is a PNE but not non-trivial")
        return EXIT_NO
    print("NTPNE")
    return EXIT_OK


def cmd_reduce(args) -> int:
    f = CnfFormula1in3.parse(Path(args.cnf).read_text())
    inst, lm = reduce_1in3_to_pgg(f)
    g = inst.graph
    prefix = args.out or str(Path(args.cnf).with_suffix(""))
    Path(prefix + ".graph").write_text(g.to_text())
    Path(prefix + ".labels.json").write_text(lm.to_json() + "\n")
    if args.format == "dot":
        Path(prefix + ".dot").write_text(reduction_dot(g, lm))
    hist = Counter(g.degree(u) for u in range(g.n))
    assert g.max_degree <= MAX_DEGREE
    print(f"nodes {g.n} edges {g.m}")
    print("gadgets " + " ".join(f"{k}={lm.count(k)}" for k in ("clause", "copy", "negation")))
    print("degrees " + " ".join(f"{d}:{hist[d]}" for d in sorted(hist)))
    print(f"wrote {prefix}.graph {prefix}.labels.json" + (f" {prefix}.dot" if args.format == "dot" else ""))
    return EXIT_OK


def reduction_dot(g: Graph, lm) -> str:
    lines = ["graph reduction {"]
    groups: dict[tuple[str, int], list[int]] = {}
    for u, lb in enumerate(lm.labels):
        groups.setdefault((lb.gadget, lb.index), []).append(u)
    for (kind, idx), nodes in sorted(groups.items()):
        lines.append(f"  subgraph cluster_{kind}_{idx} {{")
        lines.append(f'    label="{kind} {idx}";')
        for u in nodes:
            lb = lm.labels[u]
            extra = ", style=filled, fillcolor=gold" if lb.var is not None and lb.gadget == "clause" else ""
            lines.append(f'    {u} [label="{lb.role}"{extra}];')
        lines.append("  }")
    lines += [f"  {u} -- {v};" for u, v in g.edges]
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_classify(args) -> int:
    v = classify(Pattern.parse(args.pattern))
    if args.format == "text":
        line = f"{v.pattern} {v.verdict.value}"
        if v.chain is not None:
            line += " " + " ; ".join(v.chain.kinds())
        _emit(line + "\n", args.out)
    else:
        _emit(v.to_json() + "\n", args.out)
    return EXIT_OK


def cmd_gadget(args) -> int:
    if args.name not in GADGETS:
        raise ValueError(f"unknown gadget {args.name!r}; choose from {', '.join(GADGETS)}")
    if args.m < 1:
        raise ValueError("m must be >= 1")
    g = GADGETS[args.name](args.m)
    if args.format == "dot":
        text = g.to_dot()
    elif args.format == "text":
        text = g.graph.to_text()
    else:
        d = json.loads(g.witness_json())
        d.update({"n": g.n, "names": list(g.names), "edges": [list(e) for e in g.graph.edges],
                  "ports": dict(g.ports), "hooks": [list(h) for h in g.hooks]})
        text = _dump(d)
    _emit(text, args.out)
    return EXIT_OK


def cmd_dynamics(args) -> int:
    inst = _instance(args)
    start = parse_profile(args.profile) if args.profile else (0,) * inst.n
    tr = br_dynamics(inst, start, args.schedule, args.cap)
    if args.format == "text":
        lines = [f"{k} node {i} -> {h}" for k, i, h in tr.steps]
        lines.append(f"{tr.terminal.value} {format_profile(tr.final)}")
        _emit("\n".join(lines) + "\n", args.out)
    else:
        _emit(_dump(tr.to_dict()), args.out)
    return EXIT_OK if tr.terminal.value == "FIXPOINT" else EXIT_NO


def cmd_selftest(args) -> int:
    ok = True
    for g, T, c in standard_suite():
        rep = verify_gadget_contract(g, T, c, cap=args.cap)
        for line in rep.lines():
            print(line)
        ok = ok and rep.passed
    print("ALL PASS" if ok else "SOME FAILED")
    return EXIT_OK if ok else EXIT_NO


def cmd_experiment(args) -> int:
    fn = BATCHES[args.name]
    kwargs = {"seed": args.seed}
    if args.trials is not None:
        kwargs["trials"] = args.trials
    rep = fn(**kwargs)
    d = rep.to_dict()
    d["seed"] = args.seed
    _emit(_dump(d), args.out)
    return EXIT_OK if rep.ok else EXIT_NO


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="pgg", description="Public goods games on graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, graph=True, fmt=("json", "text")):
        if graph:
            sp.add_argument("--graph", required=True, help="edge-list file: 'n m' then 'u v' lines")
            sp.add_argument("--pattern", required=True, help="best-response pattern, e.g. 101")
        sp.add_argument("--format", choices=fmt, default=fmt[0])
        sp.add_argument("--out", help="write output here instead of stdout")

    sp = sub.add_parser("solve", help="decide/find a non-trivial PNE")
    common(sp, fmt=("json", "text", "dimacs"))
    sp.add_argument("--method", choices=("brute", "cnf"), default="cnf")
    sp.add_argument("--cap", type=int, default=DEFAULT_CAP, help="node cap for brute force")
    sp.set_defaults(func=cmd_solve)

    sp = sub.add_parser("verify", help="check a profile is a non-trivial PNE")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--pattern", required=True)
    sp.add_argument("--profile", required=True)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("reduce", help="compile a 1-in-3 formula into a 0-or-2 instance")
    sp.add_argument("--cnf", required=True)
    sp.add_argument("--out", help="output prefix (default: input path without suffix)")
    sp.add_argument("--format", choices=("json", "dot"), default="json",
                    help="'dot' additionally writes a clustered DOT file")
    sp.set_defaults(func=cmd_reduce)

    sp = sub.add_parser("classify", help="complexity verdict and reduction chain")
    sp.add_argument("--pattern", required=True)
    common(sp, graph=False)
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("gadget", help="emit a gadget")
    sp.add_argument("name", help=", ".join(GADGETS))
    sp.add_argument("--m", type=int, default=1)
    common(sp, graph=False, fmt=("json", "dot", "text"))
    sp.set_defaults(func=cmd_gadget)

    sp = sub.add_parser("dynamics", help="run best-response dynamics")
    common(sp)
    sp.add_argument("--profile", help="start profile (default all zero)")
    sp.add_argument("--schedule", choices=[s.value for s in Schedule], default="lowest_deviator")
    sp.add_argument("--cap", type=int, default=10**6)
    sp.set_defaults(func=cmd_dynamics)

    sp = sub.add_parser("selftest", help="exhaustively check every gadget contract")
    sp.add_argument("--cap", type=int, default=DEFAULT_CAP)
    sp.set_defaults(func=cmd_selftest)

    sp = sub.add_parser("experiment", help="seeded equivalence batch")
    sp.add_argument("name", choices=sorted(BATCHES))
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--trials", type=int)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_experiment)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (OSError, ValueError, PggError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERR


if __name__ == "__main__":
    sys.exit(main())
