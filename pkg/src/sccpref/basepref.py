"""Preferred labellings in C by maximal-model search over a Boolean encoding.

Each argument gets three variables (in, out, undec); models of the encoding
are exactly the complete labellings in C. Preferred labellings are found by
growing a model's in-set until no strictly larger one exists, then blocking
every model whose in-set is contained in the one just found.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

from .framework import ArgumentationFramework, Labelling
from .sat import BacktrackingSolver, ConstraintOracle, SolverTimeout


class BasePrefError(RuntimeError):
    def __init__(self, message: str, af: ArgumentationFramework, context: frozenset):
        super().__init__(message)
        self.af = af
        self.context = context


@dataclass(frozen=True)
class CompleteInCEncoding:
    af: ArgumentationFramework
    context: frozenset
    in_var: tuple[int, ...]
    out_var: tuple[int, ...]
    undec_var: tuple[int, ...]
    clauses: tuple[tuple[int, ...], ...]

    @property
    def nvars(self) -> int:
        return 3 * len(self.af)

    def branching_order(self) -> list[int]:
        """Arguments by descending in-degree, ties by index; in before out before undec."""
        af = self.af
        args = sorted(range(len(af)), key=lambda i: (-len(af.attackers[i]), i))
        return [v for i in args for v in (self.in_var[i], self.out_var[i], self.undec_var[i])]

    def decode(self, model: Iterable[int]) -> Labelling:
        true = {lit for lit in model if lit > 0}
        names = self.af.names
        ins, outs, undec = [], [], []
        for i, name in enumerate(names):
            if self.in_var[i] in true:
                ins.append(name)
            elif self.out_var[i] in true:
                outs.append(name)
            else:
                undec.append(name)
        return Labelling(ins, outs, undec)

    def to_dimacs(self) -> str:
        lines = [f"p cnf {self.nvars} {len(self.clauses)}"]
        lines.extend(" ".join(map(str, c + (0,))) for c in self.clauses)
        return "\n".join(lines) + "\n"


def encode_complete_in(af: ArgumentationFramework, c: Iterable | None = None) -> CompleteInCEncoding:
    c = af.arguments if c is None else af.check_subset(c)
    n = len(af)
    in_var = tuple(3 * i + 1 for i in range(n))
    out_var = tuple(3 * i + 2 for i in range(n))
    undec_var = tuple(3 * i + 3 for i in range(n))
    clauses: list[tuple[int, ...]] = []
    for i, name in enumerate(af.names):
        I, O, U = in_var[i], out_var[i], undec_var[i]
        attackers = af.attackers[i]
        clauses += [(I, O, U), (-I, -O), (-I, -U), (-O, -U)]
        # in -> every attacker out
        clauses += [(-I, out_var[b]) for b in attackers]
        if name in c:
            # every attacker out -> in
            clauses.append((I,) + tuple(-out_var[b] for b in attackers))
        else:
            clauses.append((-I,))
        # out <-> some attacker in
        clauses.append((-O,) + tuple(in_var[b] for b in attackers))
        clauses += [(-in_var[b], O) for b in attackers]
    return CompleteInCEncoding(af, c, in_var, out_var, undec_var, tuple(clauses))


def default_oracle(enc: CompleteInCEncoding, deadline: float | None = None) -> BacktrackingSolver:
    return BacktrackingSolver(enc.nvars, order=enc.branching_order(), deadline=deadline)


def b_pref(af: ArgumentationFramework, c: Iterable | None = None, *,
           deadline: float | None = None,
           oracle_factory: Callable[..., ConstraintOracle] = default_oracle) -> frozenset[Labelling]:
    enc = encode_complete_in(af, c)
    try:
        return _enumerate_maximal(enc, oracle_factory(enc, deadline))
    except SolverTimeout:
        raise
    except Exception as exc:
        raise BasePrefError(f"constraint oracle failed: {exc}", af, enc.context) from exc


def _enumerate_maximal(enc: CompleteInCEncoding, solver: ConstraintOracle) -> frozenset[Labelling]:
    for clause in enc.clauses:
        solver.add_clause(clause)
    candidates = [i for i, name in enumerate(enc.af.names) if name in enc.context]
    found: list[Labelling] = []
    while solver.solve():
        model = solver.model()
        current = enc.decode(model)
        while True:
            members = {enc.af.index[a] for a in current.in_}
            outside = [enc.in_var[i] for i in candidates if i not in members]
            if not outside:
                break
            grow = solver.new_var()
            solver.add_clause([-grow] + outside)
            sat = solver.solve([grow] + [enc.in_var[i] for i in members])
            solver.add_clause([-grow])
            if not sat:
                break
            current = enc.decode(solver.model())
        found.append(current)
        members = {enc.af.index[a] for a in current.in_}
        block = [enc.in_var[i] for i in candidates if i not in members]
        if not block:
            break
        solver.add_clause(block)
    if not found:
        raise RuntimeError("encoding has no model, yet a complete labelling in C always exists")
    return frozenset(found)
