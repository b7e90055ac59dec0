"""Brute-force enumeration of complete, grounded and preferred extensions in C.

Exhaustive over all subsets of C, so only usable on small frameworks. It is
the ground truth the rest of the package is tested against and deliberately
shares nothing with the solving code.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .framework import ArgumentationFramework

DEFAULT_BOUND = 16


class OracleBoundExceeded(ValueError):
    pass


@dataclass(frozen=True)
class OracleResult:
    extensions: frozenset[frozenset]
    semantics: str
    context: frozenset


def _masks(af: ArgumentationFramework, c: Iterable, bound: int):
    n = len(af)
    if n > bound:
        raise OracleBoundExceeded(f"{n} arguments exceed the brute-force bound of {bound}")
    c = af.check_subset(c)
    attackers = [0] * n
    targets = [0] * n
    for a, b in af.attacks:
        i, j = af.index[a], af.index[b]
        attackers[j] |= 1 << i
        targets[i] |= 1 << j
    cmask = 0
    for a in c:
        cmask |= 1 << af.index[a]
    return n, attackers, targets, cmask, c


def _complete_masks(af, c, bound):
    n, attackers, targets, cmask, c = _masks(af, c, bound)
    c_bits = [i for i in range(n) if cmask >> i & 1]
    found = []
    # every subset of C, in increasing bitmask order
    for k in range(1 << len(c_bits)):
        e = 0
        for pos, i in enumerate(c_bits):
            if k >> pos & 1:
                e |= 1 << i
        attacked = 0
        for i in range(n):
            if e >> i & 1:
                attacked |= targets[i]
        if attacked & e:
            continue  # not conflict-free
        acceptable = 0
        for i in range(n):
            if attackers[i] & ~attacked == 0:
                acceptable |= 1 << i
        if e & ~acceptable:
            continue  # some member undefended
        if acceptable & cmask & ~e:
            continue  # defends a member of C it leaves out
        found.append(e)
    return found, c


def _to_sets(af, masks):
    return frozenset(
        frozenset(af.names[i] for i in range(len(af)) if m >> i & 1) for m in masks
    )


def oracle_complete_in(af: ArgumentationFramework, c: Iterable | None = None,
                       bound: int = DEFAULT_BOUND) -> OracleResult:
    c = af.arguments if c is None else c
    masks, c = _complete_masks(af, c, bound)
    return OracleResult(_to_sets(af, masks), "complete", c)


def oracle_grounded_in(af: ArgumentationFramework, c: Iterable | None = None,
                       bound: int = DEFAULT_BOUND) -> OracleResult:
    c = af.arguments if c is None else c
    masks, c = _complete_masks(af, c, bound)
    least = [m for m in masks if all(m & o == m for o in masks)]
    if len(least) != 1:
        raise AssertionError("complete extensions in C have no least element")
    return OracleResult(_to_sets(af, least), "grounded", c)


def oracle_preferred_in(af: ArgumentationFramework, c: Iterable | None = None,
                        bound: int = DEFAULT_BOUND) -> OracleResult:
    c = af.arguments if c is None else c
    masks, c = _complete_masks(af, c, bound)
    maximal = [m for m in masks if not any(o != m and o & m == m for o in masks)]
    return OracleResult(_to_sets(af, maximal), "preferred", c)
