"""Complexity classification of finite best-response patterns.

``classify`` runs the case analysis for patterns starting with 1,0 and records
the derivation as a chain of steps, listed from the classified pattern down to
a base case with a known hardness result. ``validate_chain`` re-checks every
step's hypothesis independently of how the chain was produced.

Step semantics (each step carries the pattern it applies to, ``before``, and
the pattern it yields, ``after``):

* ``HALVE``: ``after`` is the half-pattern of ``before``; hardness of
  ``after`` lifts to its double-pattern ``before``.
* ``SHIFT(t)``: ``after`` is ``before`` shifted left by ``t``. It must be
  justified by the following ``PREPEND10(t / 2)`` step.
* ``PREPEND10(r)``: annotation on the shifted pattern: prefixing a hard
  pattern beginning with 1 by ``1,0`` keeps it hard, applied ``r`` times,
  gives back the pattern before the shift.
* ``BASE(name)``: ``before`` satisfies the hypothesis of a known result.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable

from ..core import (
    Pattern,
    half_pattern,
    is_double_of,
    is_monotone,
    is_monotone_decreasing,
    is_semi_sharp,
    is_spiked,
    prepend_10,
    shift_left,
)


class Verdict(str, Enum):
    ALWAYS_FALSE = "ALWAYS_FALSE"
    ALWAYS_TRUE = "ALWAYS_TRUE"
    POLY_KNOWN = "POLY_KNOWN"
    NP_COMPLETE = "NP_COMPLETE"
    OUT_OF_SCOPE_INFINITE = "OUT_OF_SCOPE_INFINITE"


class Base(str, Enum):
    THM1_COR_DEGREE6 = "THM1_COR_DEGREE6"
    COR_ALTERNATING = "COR_ALTERNATING"
    LEMMA_ALT_ODD = "LEMMA_ALT_ODD"
    THM2_ISOLATED_ODD = "THM2_ISOLATED_ODD"
    PRIOR_STARTS_0 = "PRIOR_STARTS_0"
    PRIOR_NONMONO_11 = "PRIOR_NONMONO_11"


# Base-case hypotheses. ``m`` is the free parameter of the result, if any.

def degree6_holds(T: Pattern, m: int | None = None) -> bool:
    return T[0] == 1 and T[2] == 1 and all(T[k] == 0 for k in (1, 3, 4, 5, 6))


def alternating_holds(T: Pattern, m: int | None) -> bool:
    if m is None or m < 1:
        return False
    return (all(T[2 * k] == 1 and T[2 * k + 1] == 0 for k in range(m + 1))
            and T[2 * m + 2] == T[2 * m + 3] == T[2 * m + 4] == 0)


def alt_odd_holds(T: Pattern, m: int | None) -> bool:
    if m is None or m < 2:
        return False
    return (all(T[2 * k] == 1 for k in range(m // 2 + 1))
            and T[1] == 0
            and any(T[2 * n + 1] == 1 for n in range(1, m // 2 + 1)))


def isolated_odd_holds(T: Pattern, m: int | None) -> bool:
    if m is None or m < 1:
        return False
    return is_semi_sharp(T) and T[2 * m] == 0 and T[2 * m + 2] == 0 and T[2 * m + 1] == 1


def starts0_holds(T: Pattern, m: int | None = None) -> bool:
    return T[0] == 0 and not is_monotone(T)


def nonmono11_holds(T: Pattern, m: int | None = None) -> bool:
    return T[0] == 1 and T[1] == 1 and not is_monotone(T)


HYPOTHESES: dict[Base, Callable[[Pattern, int | None], bool]] = {
    Base.THM1_COR_DEGREE6: degree6_holds,
    Base.COR_ALTERNATING: alternating_holds,
    Base.LEMMA_ALT_ODD: alt_odd_holds,
    Base.THM2_ISOLATED_ODD: isolated_odd_holds,
    Base.PRIOR_STARTS_0: starts0_holds,
    Base.PRIOR_NONMONO_11: nonmono11_holds,
}

PARAMETRIC = {Base.COR_ALTERNATING, Base.LEMMA_ALT_ODD, Base.THM2_ISOLATED_ODD}


def find_param(base: Base, T: Pattern) -> int | None:
    """Smallest parameter for which ``base``'s hypothesis holds on T."""
    for m in range(1, len(T) + 3):
        if HYPOTHESES[base](T, m):
            return m
    return None


@dataclass(frozen=True)
class Step:
    kind: str
    before: Pattern
    after: Pattern
    param: int | None = None
    base: Base | None = None

    def label(self) -> str:
        if self.kind == "BASE":
            return f"BASE({self.base.value}{'' if self.param is None else f', m={self.param}'})"
        if self.kind == "HALVE":
            return "HALVE"
        return f"{self.kind}({self.param})"


@dataclass
class ReductionChain:
    steps: list[Step] = field(default_factory=list)

    @property
    def base(self) -> Step | None:
        return self.steps[-1] if self.steps and self.steps[-1].kind == "BASE" else None

    def kinds(self) -> list[str]:
        return [s.label() for s in self.steps]


@dataclass
class HardnessVerdict:
    pattern: Pattern
    verdict: Verdict
    chain: ReductionChain | None = None
    note: str = ""

    def to_dict(self) -> dict:
        d = {"pattern": str(self.pattern), "verdict": self.verdict.value, "note": self.note}
        if self.chain is not None:
            report = validate_chain(self.pattern, self.chain)
            d["valid"] = report.ok
            d["chain"] = [
                {"step": s.label(), "kind": s.kind, "param": s.param,
                 "base": s.base.value if s.base else None,
                 "before": str(s.before), "after": str(s.after), "hypothesis_ok": ok}
                for s, ok in zip(self.chain.steps, report.step_ok)
            ]
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=1, sort_keys=True)


def _base(T: Pattern, base: Base) -> Step:
    m = find_param(base, T) if base in PARAMETRIC else None
    return Step("BASE", T, T, m, base)


def _semi_sharp_steps(T1: Pattern) -> list[Step]:
    seq = [T1]
    while seq[-1][1] == 0 and seq[-1] != Pattern((1,)):
        seq.append(half_pattern(seq[-1]))

    def halvings(upto: int) -> list[Step]:
        return [Step("HALVE", seq[i], seq[i + 1]) for i in range(upto)]

    if seq[-1] == Pattern((1,)):
        # never hit a 1 at index 1: the last pattern before Best-Shot has an isolated odd 1
        k = len(seq) - 2
        return halvings(k) + [_base(seq[k], Base.THM2_ISOLATED_ODD)]
    tn = seq[-1]
    if not is_monotone(tn):
        return halvings(len(seq) - 1) + [_base(tn, Base.PRIOR_NONMONO_11)]
    l = tn.max_one
    k = len(seq) - 2
    tp = seq[k]
    odd = [z for z in range(len(tp)) if tp[2 * z + 1] == 1]
    steps = halvings(k)
    if any(z <= l for z in odd):
        return steps + [_base(tp, Base.LEMMA_ALT_ODD)]
    if odd:
        ts = shift_left(tp, 2 * l)
        return steps + [Step("SHIFT", tp, ts, 2 * l), Step("PREPEND10", ts, ts, l),
                        _base(ts, Base.THM2_ISOLATED_ODD)]
    return steps + [_base(tp, Base.COR_ALTERNATING)]


def _spiked_steps(T: Pattern) -> list[Step]:
    if degree6_holds(T):
        return [_base(T, Base.THM1_COR_DEGREE6)]
    for base in (Base.COR_ALTERNATING, Base.LEMMA_ALT_ODD):
        if find_param(base, T) is not None:
            return [_base(T, base)]
    k = next(k for k in range(1, len(T) + 1) if T[2 * k] == 0)
    ts = shift_left(T, 2 * k - 2)
    return [Step("SHIFT", T, ts, 2 * k - 2), Step("PREPEND10", ts, ts, k - 1)] + _semi_sharp_steps(ts)


def classify(T: Pattern) -> HardnessVerdict:
    if T.is_zero:
        return HardnessVerdict(T, Verdict.ALWAYS_FALSE, note="no agent ever produces")
    if T[0] == 0:
        return HardnessVerdict(T, Verdict.NP_COMPLETE, ReductionChain([_base(T, Base.PRIOR_STARTS_0)]))
    if is_monotone_decreasing(T):
        if len(T) <= 2:
            name = "Best-Shot" if len(T) == 1 else "[1,1,0,...]"
            return HardnessVerdict(T, Verdict.POLY_KNOWN,
                                   note=f"{name}: efficient algorithm known; also always has a PNE")
        return HardnessVerdict(T, Verdict.ALWAYS_TRUE,
                               note="monotone decreasing: potential game, best-response dynamics converge")
    if T[1] == 1:
        return HardnessVerdict(T, Verdict.NP_COMPLETE, ReductionChain([_base(T, Base.PRIOR_NONMONO_11)]))
    steps = _spiked_steps(T) if is_spiked(T) else _semi_sharp_steps(T)
    return HardnessVerdict(T, Verdict.NP_COMPLETE, ReductionChain(steps))


@dataclass
class ChainReport:
    ok: bool
    step_ok: list[bool]
    messages: list[str]

    def __bool__(self):
        return self.ok


def validate_chain(T: Pattern, chain: ReductionChain) -> ChainReport:
    steps = chain.steps
    step_ok = [True] * len(steps)
    msgs: list[str] = []

    def fail(i: int, msg: str):
        if i >= 0:
            step_ok[i] = False
        msgs.append(f"step {i}: {msg}" if i >= 0 else msg)

    if not steps or steps[-1].kind != "BASE":
        fail(-1, "chain must be non-empty and end at a BASE step")
    cur = T
    for i, st in enumerate(steps):
        if st.before != cur:
            fail(i, f"applies to {st.before}, expected {cur}")
        if st.kind == "HALVE":
            if not is_double_of(st.before, st.after):
                fail(i, f"{st.before} is not a double-pattern of {st.after}")
        elif st.kind == "SHIFT":
            t = st.param
            nxt = steps[i + 1] if i + 1 < len(steps) else None
            if t is None or t < 1 or st.after != shift_left(st.before, t):
                fail(i, f"{st.after} is not {st.before} shifted left by {t}")
            if nxt is None or nxt.kind != "PREPEND10" or t is None or nxt.param is None or 2 * nxt.param != t:
                fail(i, "shift is not justified by a matching PREPEND10 step")
        elif st.kind == "PREPEND10":
            prev = steps[i - 1] if i > 0 else None
            r = st.param
            if r is None or r < 1 or st.after != st.before or st.before[0] != 1:
                fail(i, "prefix rule needs a pattern beginning with 1")
            elif prev is None or prev.kind != "SHIFT" or prepend_10(st.before, r) != prev.before:
                fail(i, f"prefixing 1,0 x{r} does not give back the shifted pattern")
        elif st.kind == "BASE":
            if i != len(steps) - 1:
                fail(i, "BASE must be the last step")
            if st.base is None or st.after != st.before:
                fail(i, "malformed BASE step")
            elif not HYPOTHESES[st.base](st.before, st.param):
                fail(i, f"{st.before} violates the hypothesis of {st.base.value}")
        else:
            fail(i, f"unknown step kind {st.kind}")
        cur = st.after

    # Replay from the base upwards and make sure the classified pattern comes back.
    if steps and steps[-1].kind == "BASE":
        up = steps[-1].before
        for st in reversed(steps[:-1]):
            if st.kind == "HALVE":
                if not is_double_of(st.before, up):
                    fail(-1, "replay: HALVE step does not double its successor")
                up = st.before
            elif st.kind == "PREPEND10" and st.param:
                up = prepend_10(up, st.param)
            elif st.kind == "SHIFT" and st.param is not None:
                if shift_left(up, st.param) != st.after:
                    fail(-1, "replay: shift does not undo the prefix")
        if up != T:
            fail(-1, f"replay from the base yields {up}, not {T}")
    return ChainReport(not msgs, step_ok, msgs)
