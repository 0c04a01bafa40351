"""Equilibrium solvers: exhaustive search, SAT encoding, dynamics."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from enum import Enum

from ..core import PggError, PggInstance, Profile, format_profile, is_ntpne
from .brute import DEFAULT_CAP, SearchStats, enumerate_ntpne, enumerate_pne, first_ntpne, iter_consistent
from .constructions import build_cycle_pne, build_path_pne, four_triangle_chain, triangle_chain
from .dynamics import DynamicsTrace, Schedule, Terminal, br_dynamics
from .encode import CnfEncoding, encode_ntpne_cnf
from .sat import Solver, solve_cnf


class Method(str, Enum):
    BRUTE = "brute"
    CNF = "cnf"


class Status(str, Enum):
    FOUND = "FOUND"
    NONE = "NONE"


@dataclass
class SolveResult:
    status: Status
    witness: Profile | None = None
    stats: dict = field(default_factory=dict)

    @property
    def found(self) -> bool:
        return self.status is Status.FOUND

    def to_dict(self, timing: bool = False) -> dict:
        stats = {k: v for k, v in self.stats.items() if timing or k != "elapsed"}
        return {
            "status": self.status.value,
            "witness": format_profile(self.witness) if self.witness is not None else None,
            "stats": stats,
        }

    def to_json(self, timing: bool = False) -> str:
        return json.dumps(self.to_dict(timing), sort_keys=True)


def solve_ntpne(inst: PggInstance, method: Method | str = Method.CNF,
                cap: int = DEFAULT_CAP) -> SolveResult:
    """Decide whether ``inst`` has a non-trivial PNE and return a witness.

    Both methods return the lexicographically least witness.
    """
    method = Method(method)
    t0 = time.perf_counter()
    if method is Method.BRUTE:
        st = SearchStats()
        w = first_ntpne(inst, cap=cap, stats=st)
        stats = {"nodes": st.nodes, "conflicts": 0}
    else:
        enc = encode_ntpne_cnf(inst)
        model, sst = solve_cnf(enc.num_vars, enc.clauses)
        w = enc.decode(model) if model is not None else None
        stats = {"nodes": sst.decisions, "conflicts": sst.conflicts}
    stats["elapsed"] = time.perf_counter() - t0
    if w is None:
        return SolveResult(Status.NONE, None, stats)
    if not is_ntpne(inst, w):
        raise PggError(f"{method.value} solver produced a non-equilibrium witness")
    return SolveResult(Status.FOUND, w, stats)


__all__ = [
    "DEFAULT_CAP", "CnfEncoding", "DynamicsTrace", "Method", "Schedule", "SearchStats",
    "SolveResult", "Solver", "Status", "Terminal", "br_dynamics", "build_cycle_pne",
    "build_path_pne", "encode_ntpne_cnf", "enumerate_ntpne", "enumerate_pne",
    "first_ntpne", "four_triangle_chain", "iter_consistent", "solve_cnf",
    "solve_ntpne", "triangle_chain",
]
