"""The brute-force oracle checked against hand-derived values and against a
second enumeration written directly from the set-level predicates."""

import itertools

import pytest

from conftest import AF, random_af
from sccpref.framework import ArgumentationFramework, is_acceptable, is_admissible
from sccpref.oracle import (OracleBoundExceeded, oracle_complete_in, oracle_grounded_in,
                            oracle_preferred_in)


def S(*sets):
    return {frozenset(s) for s in sets}


def complete_in_by_definition(af, c):
    c = frozenset(c)
    out = set()
    for k in range(len(c) + 1):
        for e in itertools.combinations(sorted(c), k):
            e = frozenset(e)
            if is_admissible(af, e) and all(a in e for a in c if is_acceptable(af, a, e)):
                out.add(e)
    return out


def test_complete_in_examples():
    assert oracle_complete_in(AF("a<>b")).extensions == S((), "a", "b")
    assert oracle_complete_in(AF("a")).extensions == S("a")
    assert oracle_complete_in(AF("a<>b"), {"a"}).extensions == S((), "a")


def test_grounded_in_examples():
    assert oracle_grounded_in(AF("a>b>c")).extensions == S("ac")
    assert oracle_grounded_in(AF("a<>b")).extensions == S(())
    assert oracle_grounded_in(ArgumentationFramework()).extensions == S(())


def test_preferred_in_examples():
    assert oracle_preferred_in(AF("a<>b")).extensions == S("a", "b")
    assert oracle_preferred_in(AF("a>b>c>a")).extensions == S(())
    assert oracle_preferred_in(AF("a<>b"), {"a"}).extensions == S("a")


def test_result_metadata():
    r = oracle_grounded_in(AF("a<>b"), {"a"})
    assert r.semantics == "grounded" and r.context == {"a"}
    assert len(r.extensions) == 1


def test_bound_is_enforced():
    af = ArgumentationFramework([f"x{i}" for i in range(17)])
    with pytest.raises(OracleBoundExceeded):
        oracle_complete_in(af)
    assert oracle_complete_in(af, bound=17).extensions == {af.arguments}


def test_agrees_with_definitional_enumeration(rng):
    for _ in range(150):
        af = random_af(rng, max_args=8)
        c = [a for a in af.names if rng.random() < 0.7]
        for ctx in (af.arguments, c):
            assert oracle_complete_in(af, ctx).extensions == complete_in_by_definition(af, ctx)


def test_structural_properties(rng):
    for _ in range(150):
        af = random_af(rng, max_args=10)
        c = [a for a in af.names if rng.random() < 0.8]
        (grounded,) = oracle_grounded_in(af, c).extensions
        preferred = oracle_preferred_in(af, c).extensions
        assert preferred, "at least one preferred extension in C exists"
        assert all(grounded <= p for p in preferred)
        assert all(not (p < q) for p in preferred for q in preferred)
        assert all(e <= frozenset(c) for e in preferred)
