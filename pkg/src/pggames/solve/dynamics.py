"""Sequential best-response dynamics with exact cycle detection."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Sequence

from ..core import PggInstance, Profile, format_profile, is_pne


class Schedule(str, Enum):
    ROUND_ROBIN = "round_robin"
    LOWEST_DEVIATOR = "lowest_deviator"


class Terminal(str, Enum):
    FIXPOINT = "FIXPOINT"
    CYCLE = "CYCLE"
    CAP_REACHED = "CAP_REACHED"


def profile_hash(s: Sequence[int]) -> str:
    """Hex of the profile read as a binary number, node 0 most significant."""
    return format(int(format_profile(s) or "0", 2), "x")


@dataclass
class DynamicsTrace:
    start: Profile
    steps: list[tuple[int, int, str]] = field(default_factory=list)
    terminal: Terminal = Terminal.CAP_REACHED
    final: Profile = ()
    # index into ``steps`` where the repeated state was first entered
    cycle_start: int | None = None

    def to_dict(self) -> dict:
        return {
            "start": format_profile(self.start),
            "terminal": self.terminal.value,
            "final": format_profile(self.final),
            "num_steps": len(self.steps),
            "cycle_start": self.cycle_start,
            "steps": [{"step": k, "node": i, "profile": h} for k, i, h in self.steps],
        }


def br_dynamics(inst: PggInstance, start: Sequence[int],
                schedule: Schedule | str = Schedule.LOWEST_DEVIATOR,
                cap: int = 10**6) -> DynamicsTrace:
    n = inst.n
    if len(start) != n:
        raise ValueError(f"start profile has length {len(start)}, graph has {n} nodes")
    if cap < 1:
        raise ValueError("cap must be >= 1")
    schedule = Schedule(schedule)
    adj, T = inst.graph.adjacency, inst.pattern
    s = [int(b) for b in start]
    cnt = [sum(s[j] for j in adj[i]) for i in range(n)]
    trace = DynamicsTrace(start=tuple(s))
    pointer = 0

    def state():
        key = tuple(s)
        return key if schedule is Schedule.LOWEST_DEVIATOR else (key, pointer)

    seen = {state(): 0}
    for step in range(1, cap + 1):
        i = None
        if schedule is Schedule.LOWEST_DEVIATOR:
            for u in range(n):
                if s[u] != T[cnt[u]]:
                    i = u
                    break
        else:
            for off in range(n):
                u = (pointer + off) % n
                if s[u] != T[cnt[u]]:
                    i = u
                    break
        if i is None:
            trace.terminal = Terminal.FIXPOINT
            break
        b = 1 - s[i]
        s[i] = b
        delta = 1 if b else -1
        for j in adj[i]:
            cnt[j] += delta
        pointer = (i + 1) % n
        trace.steps.append((step, i, profile_hash(s)))
        key = state()
        if key in seen:
            trace.terminal = Terminal.CYCLE
            trace.cycle_start = seen[key]
            break
        seen[key] = step
    else:
        if all(s[u] == T[cnt[u]] for u in range(n)):
            trace.terminal = Terminal.FIXPOINT
    trace.final = tuple(s)
    if trace.terminal is Terminal.FIXPOINT:
        assert is_pne(inst, trace.final)
    return trace
