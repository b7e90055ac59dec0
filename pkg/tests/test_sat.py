import itertools
import random

import pytest

from sccpref.sat import BacktrackingSolver, SolverTimeout


def brute_force_sat(nvars, clauses):
    for bits in itertools.product([False, True], repeat=nvars):
        if all(any(bits[abs(l) - 1] == (l > 0) for l in c) for c in clauses):
            return True
    return False


def satisfies(model, clauses):
    true = set(model)
    return all(any(l in true for l in c) for c in clauses)


def random_cnf(rng, nvars, nclauses, width=3):
    return [[rng.choice([-1, 1]) * v for v in rng.sample(range(1, nvars + 1), min(width, nvars))]
            for _ in range(nclauses)]


def test_random_3sat_against_brute_force():
    rng = random.Random(11)
    for _ in range(300):
        n = rng.randint(1, 10)
        clauses = random_cnf(rng, n, rng.randint(0, 5 * n), width=rng.randint(1, 3))
        s = BacktrackingSolver(n)
        for c in clauses:
            s.add_clause(c)
        result = s.solve()
        assert result == brute_force_sat(n, clauses)
        if result:
            assert satisfies(s.model(), clauses)


def test_assumptions_and_incremental_clauses():
    rng = random.Random(3)
    for _ in range(200):
        n = rng.randint(2, 8)
        clauses = random_cnf(rng, n, rng.randint(1, 4 * n))
        s = BacktrackingSolver(n)
        for c in clauses:
            s.add_clause(c)
        assumptions = [rng.choice([-1, 1]) * v for v in rng.sample(range(1, n + 1), rng.randint(0, n))]
        expected = brute_force_sat(n, clauses + [[a] for a in assumptions])
        assert s.solve(assumptions) == expected
        extra = random_cnf(rng, n, 3)
        for c in extra:
            s.add_clause(c)
        assert s.solve() == brute_force_sat(n, clauses + extra)


def test_empty_clause_and_unknown_literal():
    s = BacktrackingSolver(1)
    s.add_clause([])
    assert not s.solve()
    with pytest.raises(ValueError):
        BacktrackingSolver(1).add_clause([2])


def test_model_before_solve_raises():
    with pytest.raises(RuntimeError):
        BacktrackingSolver(1).model()


def test_dimacs_dump():
    s = BacktrackingSolver(2)
    s.add_clause([1, -2])
    s.add_clause([2])
    assert s.to_dimacs() == "p cnf 2 2\n2 0\n1 -2 0\n"


def test_deadline_interrupts_search():
    # pigeonhole 8 into 7 is unsatisfiable and slow without learning
    holes, pigeons = 7, 8
    var = lambda p, h: p * holes + h + 1
    s = BacktrackingSolver(holes * pigeons, deadline=0.0)
    for p in range(pigeons):
        s.add_clause([var(p, h) for h in range(holes)])
    for h in range(holes):
        for p, q in itertools.combinations(range(pigeons), 2):
            s.add_clause([-var(p, h), -var(q, h)])
    with pytest.raises(SolverTimeout):
        s.solve()
