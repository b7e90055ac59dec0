"""SCC-recursive enumeration of preferred labellings with level-parallel tasks.

The framework is first reduced by its grounded labelling in C; the
undecided part is split into strongly connected components laid out in
levels. Components in one level never attack each other, so every
(component, prior labelling) pair of a level can be solved independently:
those pairs are the tasks handed to the worker pool, and a barrier
separates consecutive levels.
"""

from __future__ import annotations

import time
from concurrent.futures import FIRST_EXCEPTION, ProcessPoolExecutor, wait
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .basepref import b_pref, default_oracle
from .framework import ArgumentationFramework, Labelling, restrict
from .grounded import grounded_in
from .sat import SolverTimeout
from .scc import LevelList, SccPartition, build_level_list, compute_sccs

LabellingSet = frozenset  # frozenset[Labelling]


@dataclass(frozen=True)
class InfluencePair:
    externally_defeated: frozenset  # attacked by some earlier in argument
    externally_clean: frozenset  # every earlier attacker is out


def l_cond(af: ArgumentationFramework, s: Iterable, prior: Iterable,
           lab: Labelling) -> InfluencePair:
    """Effect of the already-labelled earlier components on ``s``.

    Only attackers that belong to ``prior`` are looked at; attackers inside
    ``s`` are ignored.
    """
    s = af.check_subset(s)
    prior = af.check_subset(prior)
    defeated, clean = [], []
    for a in s:
        ext = [af.names[b] for b in af.attackers[af.index[a]] if af.names[b] in prior]
        if any(b in lab.in_ for b in ext):
            defeated.append(a)
        if all(b in lab.out for b in ext):
            clean.append(a)
    return InfluencePair(frozenset(defeated), frozenset(clean))


def merge(e1: Iterable[Labelling], e2: Iterable[Labelling]) -> LabellingSet:
    """All pairwise unions of labellings over disjoint domains."""
    e1, e2 = list(e1), list(e2)
    if e1 and e2 and not e1[0].domain.isdisjoint(e2[0].domain):
        raise ValueError("merge needs labelling sets over disjoint domains")
    return frozenset(a | b for a in e1 for b in e2)


def canonical_order(labellings: Iterable[Labelling]) -> list[Labelling]:
    """Deterministic order: by sorted in-set, then out-set."""
    return sorted(labellings, key=lambda l: (sorted(map(str, l.in_)), sorted(map(str, l.out))))


@dataclass
class EngineStats:
    levels: int = 0
    tasks: int = 0
    distinct_tasks: int = 0
    memo_hits: int = 0
    greedy_entries: int = 0
    recursive_calls: int = 0
    memo_log: list = field(default_factory=list)


def _solve_task(kind: str, comp_af: ArgumentationFramework, defeated: frozenset, ctx: frozenset,
                greedy: bool, deadline: float | None, oracle_factory) -> LabellingSet:
    if kind == "base":
        return b_pref(comp_af, ctx, deadline=deadline, oracle_factory=oracle_factory)
    # some arguments are knocked out from outside: they are out, the rest recurses
    rest = restrict(comp_af, comp_af.arguments - defeated)
    inner = PreferredEnumerator(1, greedy=greedy, deadline=deadline, oracle_factory=oracle_factory)
    return merge([Labelling(out=defeated)], inner.p_pref(rest, ctx))


class PreferredEnumerator:
    """Runs the level-synchronous enumeration on ``workers`` processes.

    With one worker everything runs inline. Recursive calls made inside a
    worker task always run inline in that worker.
    """

    def __init__(self, workers: int = 1, *, greedy: bool = False, deadline: float | None = None,
                 oracle_factory: Callable = default_oracle, record_memo_hits: bool = False):
        if workers < 1:
            raise ValueError("workers must be at least 1")
        self.workers = workers
        self.greedy = greedy
        self.deadline = deadline
        self.oracle_factory = oracle_factory
        self.record_memo_hits = record_memo_hits
        self.stats = EngineStats()
        self._pool: ProcessPoolExecutor | None = None

    def __enter__(self):
        if self.workers > 1 and self._pool is None:
            self._pool = ProcessPoolExecutor(max_workers=self.workers)
        return self

    def __exit__(self, *exc):
        self.close(kill=exc[0] is not None)

    def close(self, kill: bool = False) -> None:
        pool, self._pool = self._pool, None
        if pool is None:
            return
        if kill:
            for proc in list(getattr(pool, "_processes", {}).values()):
                proc.terminate()
        pool.shutdown(wait=True, cancel_futures=True)

    def _check_deadline(self) -> None:
        if self.deadline is not None and time.time() > self.deadline:
            raise SolverTimeout()

    def _run_all(self, tasks: dict) -> dict:
        """Run ``key -> (kind, comp_af, defeated, ctx)`` tasks; return ``key -> result``."""
        args = (self.greedy, self.deadline, self.oracle_factory)
        if self._pool is None:
            out = {}
            for key, task in tasks.items():
                self._check_deadline()
                out[key] = _solve_task(*task, *args)
            return out
        futures = {key: self._pool.submit(_solve_task, *task, *args) for key, task in tasks.items()}
        timeout = None if self.deadline is None else max(0.0, self.deadline - time.time()) + 1.0
        done, not_done = wait(futures.values(), timeout=timeout, return_when=FIRST_EXCEPTION)
        if not_done:
            for f in not_done:
                f.cancel()
            for f in done:
                if f.exception() is not None:
                    raise f.exception()
            raise SolverTimeout()
        return {key: f.result() for key, f in futures.items()}

    def pref(self, af: ArgumentationFramework) -> LabellingSet:
        return self.p_pref(af, af.arguments)

    def greedy_precompute(self, af: ArgumentationFramework, levels: LevelList, c: Iterable,
                          partition: SccPartition | None = None) -> dict[int, LabellingSet]:
        """Preferred labellings of every component with no outside influence."""
        c = frozenset(c)
        partition = partition or compute_sccs(af)
        tasks = {}
        for level in levels:
            for k in level:
                comp = partition.components[k]
                tasks[k] = ("base", restrict(af, comp), frozenset(), comp & c)
        memo = self._run_all(tasks)
        self.stats.greedy_entries += len(memo)
        return memo

    def p_pref(self, af: ArgumentationFramework, c: Iterable) -> LabellingSet:
        self._check_deadline()
        c = af.check_subset(c)
        grounded = grounded_in(af, c)
        e_p = [grounded.decided]
        if not grounded.undecided:
            return frozenset(e_p)
        af = restrict(af, grounded.undecided)
        part = compute_sccs(af)
        levels = build_level_list(af, part)
        self.stats.levels += len(levels)
        comp_afs: dict[int, ArgumentationFramework] = {}

        def comp_af(k):
            if k not in comp_afs:
                comp_afs[k] = restrict(af, part.components[k])
            return comp_afs[k]

        memo = None
        if self.greedy:
            memo = self.greedy_precompute(af, levels, c, part)

        for level in levels:
            self._check_deadline()
            # key of the task answering each (component, prior labelling) pair
            answer: dict[int, dict[Labelling, object]] = {}
            tasks: dict = {}
            fixed: dict = {}
            for k in level:
                comp = part.components[k]
                ext = _external_attackers(af, part, k)
                answer[k] = {}
                for lab in e_p:
                    self.stats.tasks += 1
                    defeated = frozenset(a for a, att in ext if any(b in lab.in_ for b in att))
                    clean = frozenset(a for a, att in ext if all(b in lab.out for b in att))
                    if not clean:
                        key = (k, "none", defeated)
                        fixed[key] = frozenset([Labelling(out=defeated, undec=comp - defeated)])
                    elif clean == comp:
                        key = (k, "base", frozenset(), comp & c)
                        if memo is not None:
                            self.stats.memo_hits += 1
                            fixed[key] = memo[k]
                            if self.record_memo_hits:
                                self.stats.memo_log.append((comp_af(k), comp & c, memo[k]))
                        else:
                            tasks[key] = ("base", comp_af(k), frozenset(), comp & c)
                    elif not defeated:
                        key = (k, "base", frozenset(), clean & c)
                        tasks[key] = ("base", comp_af(k), frozenset(), clean & c)
                    else:
                        key = (k, "recurse", defeated, clean & c)
                        tasks[key] = ("recurse", comp_af(k), defeated, clean & c)
                        self.stats.recursive_calls += 1
                    answer[k][lab] = key
            self.stats.distinct_tasks += len(tasks)
            results = {**fixed, **self._run_all(tasks)}
            # fold components one by one; results stay keyed by the level-entry labelling
            grown = [(lab, lab) for lab in e_p]
            for k in level:
                grown = [(origin, lab | part_lab) for origin, lab in grown
                         for part_lab in results[answer[k][origin]]]
            e_p = [lab for _, lab in grown]
        return frozenset(e_p)


def _external_attackers(af: ArgumentationFramework, part: SccPartition, k: int):
    """(argument, attackers outside its component) for each member of component ``k``."""
    members = set(part.members[k])
    names = af.names
    return [
        (names[i], tuple(names[b] for b in af.attackers[i] if b not in members))
        for i in part.members[k]
    ]


def p_pref(af: ArgumentationFramework, c: Iterable | None = None, *, workers: int = 1,
           greedy: bool = False, deadline: float | None = None) -> LabellingSet:
    c = af.arguments if c is None else c
    with PreferredEnumerator(workers, greedy=greedy, deadline=deadline) as engine:
        return engine.p_pref(af, c)


def pref(af: ArgumentationFramework, *, workers: int = 1, greedy: bool = False,
         deadline: float | None = None) -> LabellingSet:
    """All preferred labellings of ``af``."""
    return p_pref(af, af.arguments, workers=workers, greedy=greedy, deadline=deadline)


def greedy_precompute(af: ArgumentationFramework, levels: LevelList, c: Iterable | None = None,
                      *, workers: int = 1) -> dict[int, LabellingSet]:
    c = af.arguments if c is None else c
    with PreferredEnumerator(workers) as engine:
        return engine.greedy_precompute(af, levels, c)
