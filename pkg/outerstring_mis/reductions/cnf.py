"""
CNF formulas: DIMACS I/O and two independent satisfiability oracles
"""

import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

import numpy as np

from outerstring_mis.config import SAT_VARIABLE_LIMIT
from outerstring_mis.errors import ParseError, SizeGuardError, ValidationError

logger = logging.getLogger(__name__)


@dataclass
class CnfFormula:
    var_count: int
    clauses: list[tuple[int, ...]] = field(default_factory=list)

    def __post_init__(self):
        self.clauses = [tuple(c) for c in self.clauses]
        violations = []
        for i, clause in enumerate(self.clauses, start=1):
            if not clause:
                violations.append(f"clause {i}: empty")
            if len(set(clause)) != len(clause):
                violations.append(f"clause {i}: duplicate literal")
            if any(lit == 0 or abs(lit) > self.var_count for lit in clause):
                violations.append(f"clause {i}: literal out of range 1..{self.var_count}")
        if violations:
            raise ValidationError(violations)

    @property
    def clause_count(self) -> int:
        return len(self.clauses)

    def clause_satisfied(self, index: int, values: dict[int, bool]) -> bool:
        """True when some literal of the clause is made true by the (partial) assignment"""
        return any(values.get(abs(lit)) == (lit > 0) for lit in self.clauses[index])

    def is_satisfied_by(self, values: dict[int, bool]) -> bool:
        return all(self.clause_satisfied(i, values) for i in range(self.clause_count))


def parse_dimacs(text: str) -> CnfFormula:
    """
    Parse DIMACS CNF text

    Key elements:
    - `c ...` comment lines
    - one `p cnf <vars> <clauses>` problem line before any clause
    - clauses are literal lists terminated by 0, and may span lines
    - `%` ends the input (some benchmark files carry trailing junk after it)

    Args:
        text: File contents

    Returns:
        CnfFormula
    """
    var_count = None
    declared = 0
    clauses: list[tuple[int, ...]] = []
    current: list[int] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("%"):
            break
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise ParseError("problem line must be 'p cnf <vars> <clauses>'", line_no)
            try:
                var_count, declared = int(parts[2]), int(parts[3])
            except ValueError:
                raise ParseError("problem line counts must be integers", line_no) from None
            continue
        if var_count is None:
            raise ParseError("clause before the problem line", line_no)
        for token in line.split():
            try:
                lit = int(token)
            except ValueError:
                raise ParseError(f"bad literal {token!r}", line_no) from None
            if lit == 0:
                clauses.append(tuple(current))
                current = []
            else:
                current.append(lit)
    if var_count is None:
        raise ParseError("missing 'p cnf' problem line")
    if current:
        clauses.append(tuple(current))
    if len(clauses) != declared:
        raise ParseError(f"problem line declares {declared} clauses, found {len(clauses)}")
    return CnfFormula(var_count, clauses)


def load_dimacs(filepath: str | Path) -> CnfFormula:
    return parse_dimacs(Path(filepath).read_text(encoding="utf-8-sig"))


def to_dimacs(f: CnfFormula) -> str:
    lines = [f"p cnf {f.var_count} {f.clause_count}"]
    lines += [" ".join(str(lit) for lit in clause) + " 0" for clause in f.clauses]
    return "\n".join(lines) + "\n"


def find_assignment(f: CnfFormula) -> Optional[dict[int, bool]]:
    """
    Exhaustive search over all 2^n assignments, vectorised per clause

    Args:
        f: Formula with at most SAT_VARIABLE_LIMIT variables

    Returns:
        The satisfying assignment with the smallest index (bit v-1 = variable v), or None
    """
    if f.var_count > SAT_VARIABLE_LIMIT:
        raise SizeGuardError(f"too many variables: {f.var_count} > {SAT_VARIABLE_LIMIT}")
    assignments = np.arange(1 << f.var_count, dtype=np.uint32)
    alive = np.ones(assignments.shape, dtype=bool)
    for clause in f.clauses:
        hit = np.zeros(assignments.shape, dtype=bool)
        for lit in clause:
            bit = (assignments >> np.uint32(abs(lit) - 1)) & np.uint32(1)
            hit |= bit == (1 if lit > 0 else 0)
        alive &= hit
    winners = np.flatnonzero(alive)
    if winners.size == 0:
        return None
    a = int(winners[0])
    return {v: bool((a >> (v - 1)) & 1) for v in range(1, f.var_count + 1)}


def sat_brute_force(f: CnfFormula) -> bool:
    """Whether f is satisfiable, by exhaustive search (see find_assignment)"""
    return find_assignment(f) is not None


def dpll_satisfiable(f: CnfFormula) -> bool:
    """Davis-Putnam-Logemann-Loveland search with unit propagation and pure literals"""

    def simplify(clauses: list[frozenset[int]], lit: int) -> Optional[list[frozenset[int]]]:
        out = []
        for clause in clauses:
            if lit in clause:
                continue
            reduced = clause - {-lit}
            if not reduced:
                return None
            out.append(reduced)
        return out

    def solve(clauses: list[frozenset[int]]) -> bool:
        while True:
            if not clauses:
                return True
            unit = next((next(iter(c)) for c in clauses if len(c) == 1), None)
            if unit is None:
                literals = {lit for c in clauses for lit in c}
                unit = next((lit for lit in sorted(literals) if -lit not in literals), None)
            if unit is None:
                break
            clauses = simplify(clauses, unit)
            if clauses is None:
                return False
        lit = min((lit for c in clauses for lit in c), key=abs)
        for choice in (lit, -lit):
            branch = simplify(clauses, choice)
            if branch is not None and solve(branch):
                return True
        return False

    return solve([frozenset(c) for c in f.clauses])


def random_ksat(var_count: int, clause_count: int, k: int, rng: np.random.Generator) -> CnfFormula:
    """
    Uniform random k-SAT: each clause picks k distinct variables and random signs

    Args:
        var_count: Number of variables (k <= var_count)
        clause_count: Number of clauses
        k: Literals per clause
        rng: Seeded generator

    Returns:
        CnfFormula
    """
    if not 1 <= k <= var_count:
        raise ValueError(f"k={k} must lie in 1..{var_count}")
    clauses = []
    for _ in range(clause_count):
        variables = rng.choice(np.arange(1, var_count + 1), size=k, replace=False)
        signs = rng.choice(np.array([-1, 1]), size=k)
        clauses.append(tuple(int(v * s) for v, s in zip(sorted(variables), signs)))
    return CnfFormula(var_count, clauses)
