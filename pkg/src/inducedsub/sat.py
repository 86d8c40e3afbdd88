"""3-CNF formulas and a small DPLL solver."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass


@dataclass(frozen=True)
class CnfFormula:
    """3-SAT instance; literal ``+i`` is x_i and ``-i`` its negation."""

    num_vars: int
    clauses: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        clauses = tuple(tuple(int(lit) for lit in c) for c in self.clauses)
        object.__setattr__(self, "clauses", clauses)
        if self.num_vars < 0:
            raise ValueError("negative variable count")
        for c in clauses:
            if len(c) != 3:
                raise ValueError(f"clause {c} does not have exactly three literals")
            for lit in c:
                if lit == 0 or abs(lit) > self.num_vars:
                    raise ValueError(f"literal {lit} out of range")

    @property
    def num_clauses(self) -> int:
        return len(self.clauses)

    def satisfied_by(self, assignment: dict[int, bool]) -> bool:
        return all(any(assignment[abs(l)] == (l > 0) for l in c) for c in self.clauses)

    def to_json(self) -> dict:
        return {"num_vars": self.num_vars, "clauses": [list(c) for c in self.clauses]}


def random_formula(num_vars: int, num_clauses: int, rng: random.Random) -> CnfFormula:
    clauses = []
    for _ in range(num_clauses):
        clauses.append(tuple(rng.randint(1, num_vars) * rng.choice((1, -1)) for _ in range(3)))
    return CnfFormula(num_vars, tuple(clauses))


def exhaustive_formulas(max_vars: int = 2, max_clauses: int = 2) -> list[CnfFormula]:
    """Every formula up to clause reordering that mentions all of its variables.

    A clause is a multiset of three literals, so (x1, x1, -x2) is allowed.
    """
    out = []
    for n in range(1, max_vars + 1):
        lits = [l for i in range(1, n + 1) for l in (i, -i)]
        clauses = list(itertools.combinations_with_replacement(lits, 3))
        for m in range(1, max_clauses + 1):
            for cs in itertools.combinations_with_replacement(clauses, m):
                if len({abs(l) for c in cs for l in c}) == n:
                    out.append(CnfFormula(n, cs))
    return out


def solve_sat(f: CnfFormula) -> dict[int, bool] | None:
    """DPLL with unit propagation; unassigned variables default to False."""
    clauses = [frozenset(c) for c in f.clauses]
    result = _dpll(clauses, {})
    if result is None:
        return None
    return {i: result.get(i, False) for i in range(1, f.num_vars + 1)}


def _simplify(clauses, lit):
    out = []
    for c in clauses:
        if lit in c:
            continue
        if -lit in c:
            c = c - {-lit}
            if not c:
                return None
        out.append(c)
    return out


def _dpll(clauses, assignment):
    while True:
        unit = next((c for c in clauses if len(c) == 1), None)
        if unit is None:
            break
        (lit,) = unit
        assignment = {**assignment, abs(lit): lit > 0}
        clauses = _simplify(clauses, lit)
        if clauses is None:
            return None
    if not clauses:
        return assignment
    lit = min(clauses[0], key=lambda l: (abs(l), -l))
    for choice in (lit, -lit):
        reduced = _simplify(clauses, choice)
        if reduced is None:
            continue
        res = _dpll(reduced, {**assignment, abs(choice): choice > 0})
        if res is not None:
            return res
    return None
