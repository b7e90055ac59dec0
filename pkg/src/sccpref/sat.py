"""A small incremental propositional solver.

Unit propagation over two watched literals plus chronological backtracking,
with assumption literals and an optional static branching order. No clause
learning: the formulas handed to it come from single components and stay
small.
"""

from __future__ import annotations

import time
from typing import Iterable, Protocol, Sequence


class SolverTimeout(Exception):
    """Raised when a deadline passes in the middle of a computation."""


class ConstraintOracle(Protocol):
    def new_var(self) -> int: ...

    def add_clause(self, clause: Iterable[int]) -> None: ...

    def solve(self, assumptions: Sequence[int] = ()) -> bool: ...

    def model(self) -> list[int]: ...


class BacktrackingSolver:
    def __init__(self, nvars: int = 0, order: Sequence[int] | None = None,
                 deadline: float | None = None):
        self.nvars = 0
        self.clauses: list[list[int]] = []
        self.units: list[int] = []
        self.watches: dict[int, list[int]] = {}
        self.assign: list[int] = [0]
        self.order: list[int] = list(order or [])
        self.deadline = deadline
        self.inconsistent = False
        self._model: list[int] | None = None
        self.decisions = 0
        for _ in range(nvars):
            self.new_var()

    def new_var(self) -> int:
        self.nvars += 1
        v = self.nvars
        self.assign.append(0)
        self.watches[v] = []
        self.watches[-v] = []
        return v

    def set_order(self, order: Sequence[int]) -> None:
        self.order = list(order)

    def add_clause(self, clause: Iterable[int]) -> None:
        c = list(dict.fromkeys(clause))
        if any(-lit in c for lit in c):
            return  # tautology
        for lit in c:
            if not 0 < abs(lit) <= self.nvars:
                raise ValueError(f"literal {lit} refers to an unknown variable")
        if not c:
            self.inconsistent = True
        elif len(c) == 1:
            self.units.append(c[0])
        else:
            idx = len(self.clauses)
            self.clauses.append(c)
            self.watches[c[0]].append(idx)
            self.watches[c[1]].append(idx)

    def to_dimacs(self) -> str:
        rows = [[u] for u in self.units] + self.clauses
        if self.inconsistent:
            rows.append([])
        lines = [f"p cnf {self.nvars} {len(rows)}"]
        lines.extend(" ".join(map(str, r + [0])) for r in rows)
        return "\n".join(lines) + "\n"

    # -- search ---------------------------------------------------------

    def _value(self, lit: int) -> int:
        a = self.assign[lit] if lit > 0 else -self.assign[-lit]
        return a

    def _enqueue(self, lit: int) -> bool:
        v = self._value(lit)
        if v == 1:
            return True
        if v == -1:
            return False
        if lit > 0:
            self.assign[lit] = 1
        else:
            self.assign[-lit] = -1
        self.trail.append(lit)
        return True

    def _propagate(self) -> bool:
        assign = self.assign
        clauses = self.clauses
        watches = self.watches
        trail = self.trail
        while self.qhead < len(trail):
            false_lit = -trail[self.qhead]
            self.qhead += 1
            ws = watches[false_lit]
            i = j = 0
            n = len(ws)
            while i < n:
                ci = ws[i]
                i += 1
                c = clauses[ci]
                if c[0] == false_lit:
                    c[0] = c[1]
                    c[1] = false_lit
                first = c[0]
                fv = assign[first] if first > 0 else -assign[-first]
                if fv == 1:
                    ws[j] = ci
                    j += 1
                    continue
                for k in range(2, len(c)):
                    lit = c[k]
                    lv = assign[lit] if lit > 0 else -assign[-lit]
                    if lv != -1:
                        c[1] = lit
                        c[k] = false_lit
                        watches[lit].append(ci)
                        break
                else:
                    ws[j] = ci
                    j += 1
                    if fv == -1:
                        while i < n:
                            ws[j] = ws[i]
                            j += 1
                            i += 1
                        del ws[j:]
                        return False
                    if first > 0:
                        assign[first] = 1
                    else:
                        assign[-first] = -1
                    trail.append(first)
            del ws[j:]
        return True

    def _undo_to(self, size: int) -> None:
        trail = self.trail
        assign = self.assign
        while len(trail) > size:
            lit = trail.pop()
            assign[lit if lit > 0 else -lit] = 0
        self.qhead = size

    def _check_deadline(self) -> None:
        if self.deadline is not None and time.time() > self.deadline:
            raise SolverTimeout()

    def solve(self, assumptions: Sequence[int] = ()) -> bool:
        self._model = None
        if self.inconsistent:
            return False
        self.assign = [0] * (self.nvars + 1)
        self.trail: list[int] = []
        self.qhead = 0
        for u in self.units:
            if not self._enqueue(u):
                return False
        if not self._propagate():
            return False
        for lit in assumptions:
            if not self._enqueue(lit) or not self._propagate():
                return False

        order = self.order
        if len(order) < self.nvars:
            listed = set(order)
            order = order + [v for v in range(1, self.nvars + 1) if v not in listed]
        rank = {v: i for i, v in enumerate(order)}
        # decision stack entries: (trail size before decision, literal, flipped)
        stack: list[tuple[int, int, bool]] = []
        assign = self.assign
        pos = 0
        while True:
            while pos < len(order) and assign[order[pos]] != 0:
                pos += 1
            if pos == len(order):
                self._model = [v if assign[v] > 0 else -v for v in range(1, self.nvars + 1)]
                return True
            self.decisions += 1
            if self.decisions & 1023 == 0:
                self._check_deadline()
            lit = order[pos]
            mark = len(self.trail)
            stack.append((mark, lit, False))
            self._enqueue(lit)
            ok = self._propagate()
            while not ok:
                while stack and stack[-1][2]:
                    stack.pop()
                if not stack:
                    return False
                mark, lit, _ = stack.pop()
                self._undo_to(mark)
                stack.append((mark, -lit, True))
                self._enqueue(-lit)
                ok = self._propagate()
            # variables ranked before the newest decision are still assigned
            pos = min(pos, rank[abs(stack[-1][1])])

    def model(self) -> list[int]:
        if self._model is None:
            raise RuntimeError("no model available; last solve() was not satisfiable")
        return self._model
