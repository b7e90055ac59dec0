"""Grounded labelling in a context set C by worklist propagation."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .framework import ArgumentationFramework, Labelling


@dataclass(frozen=True)
class GroundedOutcome:
    decided: Labelling  # only in/out labels
    undecided: frozenset


def grounded_in(af: ArgumentationFramework, c: Iterable | None = None) -> GroundedOutcome:
    """Least fixpoint of "in when all attackers are out" (members of C only)
    and "out when some attacker is in".

    Each argument keeps a count of attackers not yet out; it becomes in when
    that count reaches zero, so the whole run is linear in the attack count.
    """
    c = af.arguments if c is None else af.check_subset(c)
    n = len(af)
    allowed = [name in c for name in af.names]
    pending = [len(att) for att in af.attackers]
    state = [0] * n  # 0 unlabelled, 1 in, -1 out
    queue = deque(i for i in range(n) if pending[i] == 0 and allowed[i])
    for i in queue:
        state[i] = 1
    targets = af.targets
    while queue:
        a = queue.popleft()
        for t in targets[a]:
            if state[t] != 0:
                continue
            state[t] = -1
            for u in targets[t]:
                pending[u] -= 1
                if pending[u] == 0 and state[u] == 0 and allowed[u]:
                    state[u] = 1
                    queue.append(u)
    names = af.names
    ins = [names[i] for i in range(n) if state[i] == 1]
    outs = [names[i] for i in range(n) if state[i] == -1]
    undecided = frozenset(names[i] for i in range(n) if state[i] == 0)
    return GroundedOutcome(Labelling(ins, outs), undecided)
