"""3-literal CNF formulas read under exactly-one-true semantics."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product
from typing import Sequence

from ..core import ParseError

Literal = tuple[int, bool]  # (0-based variable, positive?)

HEADER = "ONE-IN-THREE 3SAT: each clause needs exactly one true literal"


@dataclass(frozen=True)
class CnfFormula1in3:
    num_vars: int
    clauses: tuple[tuple[Literal, Literal, Literal], ...]

    def __post_init__(self):
        for cl in self.clauses:
            if len(cl) != 3:
                raise ValueError(f"clause {cl!r} does not have exactly 3 literals")
            for var, _ in cl:
                if not 0 <= var < self.num_vars:
                    raise ValueError(f"variable {var} out of range [0, {self.num_vars})")

    @classmethod
    def from_ints(cls, num_vars: int, clauses: Sequence[Sequence[int]]) -> "CnfFormula1in3":
        """Build from DIMACS-style signed 1-based literals."""
        out = []
        for cl in clauses:
            if len(cl) != 3:
                raise ValueError(f"clause {list(cl)} does not have exactly 3 literals")
            if any(x == 0 for x in cl):
                raise ValueError("literal 0 is not allowed")
            out.append(tuple((abs(x) - 1, x > 0) for x in cl))
        return cls(num_vars, tuple(out))

    def to_ints(self) -> list[list[int]]:
        return [[(v + 1) if pos else -(v + 1) for v, pos in cl] for cl in self.clauses]

    def satisfied_by(self, a: Sequence[bool]) -> bool:
        return all(sum(bool(a[v]) == pos for v, pos in cl) == 1 for cl in self.clauses)

    def solutions(self) -> list[tuple[bool, ...]]:
        return [a for a in product((False, True), repeat=self.num_vars) if self.satisfied_by(a)]

    def is_satisfiable(self) -> bool:
        return any(self.satisfied_by(a) for a in product((False, True), repeat=self.num_vars))

    def to_dimacs(self) -> str:
        lines = [f"c {HEADER}", f"p cnf {self.num_vars} {len(self.clauses)}"]
        lines += [" ".join(map(str, cl)) + " 0" for cl in self.to_ints()]
        return "\n".join(lines) + "\n"

    @classmethod
    def parse(cls, text: str) -> "CnfFormula1in3":
        num_vars = None
        nclauses = 0
        clauses: list[list[int]] = []
        for raw in text.splitlines():
            line = raw.strip()
            if not line or line.startswith("c"):
                continue
            if line.startswith("p"):
                parts = line.split()
                if len(parts) != 4 or parts[1] != "cnf":
                    raise ParseError(f"bad problem line {line!r}")
                num_vars, nclauses = int(parts[2]), int(parts[3])
                continue
            if num_vars is None:
                raise ParseError("clause before 'p cnf' header")
            try:
                lits = [int(t) for t in line.split()]
            except ValueError:
                raise ParseError(f"malformed clause line {line!r}") from None
            if not lits or lits[-1] != 0 or 0 in lits[:-1]:
                raise ParseError(f"clause line {line!r} must hold literals ending with 0")
            if len(lits) != 4:
                raise ParseError(f"clause line {line!r} must hold exactly 3 literals")
            clauses.append(lits[:-1])
        if num_vars is None:
            raise ParseError("missing 'p cnf' header")
        if len(clauses) != nclauses:
            raise ParseError(f"header announces {nclauses} clauses, found {len(clauses)}")
        try:
            return cls.from_ints(num_vars, clauses)
        except ValueError as exc:
            raise ParseError(str(exc)) from None


def random_formula(rng: random.Random, max_clauses: int = 4, max_vars: int = 6) -> CnfFormula1in3:
    nv = rng.randint(1, max_vars)
    nc = rng.randint(1, max_clauses)
    clauses = tuple(
        tuple((rng.randrange(nv), rng.random() < 0.5) for _ in range(3)) for _ in range(nc)
    )
    return CnfFormula1in3(nv, clauses)
