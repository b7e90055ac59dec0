"""Strongly connected components of the attack graph and their level layout."""

from __future__ import annotations

from dataclasses import dataclass

from .framework import ArgumentationFramework


@dataclass(frozen=True)
class SccPartition:
    """Components as frozensets of argument names.

    Components are numbered by their smallest argument index in the
    framework, so numbering is deterministic.
    """

    components: tuple[frozenset, ...]
    component_of: dict
    # same components as sorted argument-index tuples
    members: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class LevelList:
    levels: tuple[tuple[int, ...], ...]

    def __iter__(self):
        return iter(self.levels)

    def __len__(self):
        return len(self.levels)


def _tarjan(succ: tuple[tuple[int, ...], ...]) -> list[list[int]]:
    n = len(succ)
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    out: list[list[int]] = []
    counter = 0
    for root in range(n):
        if index[root] != -1:
            continue
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        work = [(root, 0)]
        while work:
            v, pos = work[-1]
            nbrs = succ[v]
            if pos < len(nbrs):
                work[-1] = (v, pos + 1)
                w = nbrs[pos]
                if index[w] == -1:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, 0))
                elif on_stack[w] and index[w] < low[v]:
                    low[v] = index[w]
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                if low[v] < low[parent]:
                    low[parent] = low[v]
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                out.append(comp)
    return out


def compute_sccs(af: ArgumentationFramework) -> SccPartition:
    raw = sorted((sorted(c) for c in _tarjan(af.targets)), key=lambda c: c[0])
    members = tuple(tuple(c) for c in raw)
    components = tuple(frozenset(af.names[i] for i in c) for c in members)
    component_of = {af.names[i]: k for k, c in enumerate(members) for i in c}
    return SccPartition(components, component_of, members)


def condensation_edges(af: ArgumentationFramework, p: SccPartition) -> set[tuple[int, int]]:
    comp = [0] * len(af)
    for k, c in enumerate(p.members):
        for i in c:
            comp[i] = k
    return {(comp[a], comp[b]) for a, ts in enumerate(af.targets) for b in ts if comp[a] != comp[b]}


def build_level_list(af: ArgumentationFramework, p: SccPartition) -> LevelList:
    """Longest-path layering of the condensation.

    A component sits one level below its deepest attacker, so every attacker
    is in an earlier level and every attacked component in a later one.
    """
    k = len(p.members)
    succ: list[set[int]] = [set() for _ in range(k)]
    indeg = [0] * k
    for a, b in condensation_edges(af, p):
        succ[a].add(b)
        indeg[b] += 1
    level = [0] * k
    ready = [c for c in range(k) if indeg[c] == 0]
    seen = 0
    while ready:
        c = ready.pop()
        seen += 1
        for d in succ[c]:
            level[d] = max(level[d], level[c] + 1)
            indeg[d] -= 1
            if indeg[d] == 0:
                ready.append(d)
    if seen != k:
        raise RuntimeError("condensation graph has a cycle")
    if k == 0:
        return LevelList(())
    buckets: list[list[int]] = [[] for _ in range(max(level) + 1)]
    for c in range(k):
        buckets[level[c]].append(c)
    return LevelList(tuple(tuple(b) for b in buckets))
