import random

import pytest
from hypothesis import strategies as st

from sccpref.framework import ArgumentationFramework


def random_af(rng: random.Random, max_args: int = 12, self_attacks: bool = True) -> ArgumentationFramework:
    """Mixed-density random framework; may be disconnected or empty."""
    n = rng.randint(0, max_args)
    names = [f"x{i}" for i in range(n)]
    density = rng.choice([0.05, 0.1, 0.2, 0.3, 0.5])
    attacks = [(a, b) for a in names for b in names
               if (a != b or self_attacks) and rng.random() < (density if a != b else density / 3)]
    return ArgumentationFramework(names, attacks)


@st.composite
def frameworks(draw, max_args=8):
    n = draw(st.integers(0, max_args))
    names = [f"x{i}" for i in range(n)]
    pairs = [(a, b) for a in names for b in names]
    attacks = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=3 * n)) if pairs else []
    return ArgumentationFramework(names, attacks)


@st.composite
def frameworks_with_subset(draw, max_args=8):
    af = draw(frameworks(max_args))
    subset = draw(st.sets(st.sampled_from(af.names))) if af.names else set()
    return af, frozenset(subset)


def AF(text: str) -> ArgumentationFramework:
    """Tiny fixture syntax: ``"a>b b>a c"`` declares a->b, b->a and isolated c; ``a<>b`` is mutual."""
    args, attacks = [], []
    for tok in text.split():
        if "<>" in tok:
            a, b = tok.split("<>")
            attacks += [(a, b), (b, a)]
            args += [a, b]
        elif ">" in tok:
            chain = tok.split(">")
            attacks += list(zip(chain, chain[1:]))
            args += chain
        else:
            args.append(tok)
    return ArgumentationFramework(args, attacks)


@pytest.fixture
def rng():
    return random.Random(20260101)


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def report(capsys):
    """Record one PASS/FAIL line for an acceptance criterion and echo it live."""
    def emit(number: int, passed: bool, detail: str) -> bool:
        line = f"[criterion {number}] {'PASS' if passed else 'FAIL'}: {detail}"
        ACCEPTANCE_LINES.append(line)
        with capsys.disabled():
            print("\n" + line)
        return passed
    return emit


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
