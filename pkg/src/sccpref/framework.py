"""Argumentation frameworks, labellings and the basic set algebra over them."""

from __future__ import annotations

import enum
from typing import Hashable, Iterable, Iterator, Mapping


class DomainError(ValueError):
    """An argument or set is not part of the framework it was used with."""


class Label(enum.Enum):
    IN = "in"
    OUT = "out"
    UNDEC = "undec"

    def __repr__(self) -> str:
        return self.value


IN, OUT, UNDEC = Label.IN, Label.OUT, Label.UNDEC


class ArgumentationFramework:
    """A finite set of arguments with an attack relation.

    Arguments are interned to dense indices in declaration order; the
    ``attackers``/``targets`` tuples give reverse and forward adjacency by
    index. Equality is structural over argument names.
    """

    __slots__ = ("names", "index", "attacks", "attackers", "targets", "_hash")

    def __init__(self, arguments: Iterable[Hashable] = (), attacks: Iterable[tuple] = ()):
        names = tuple(dict.fromkeys(arguments))
        index = {name: i for i, name in enumerate(names)}
        pairs = set()
        for a, b in attacks:
            if a not in index or b not in index:
                missing = a if a not in index else b
                raise DomainError(f"attack ({a!r}, {b!r}) uses undeclared argument {missing!r}")
            pairs.add((a, b))
        fwd: list[list[int]] = [[] for _ in names]
        rev: list[list[int]] = [[] for _ in names]
        for a, b in sorted(pairs, key=lambda p: (index[p[0]], index[p[1]])):
            fwd[index[a]].append(index[b])
            rev[index[b]].append(index[a])
        self.names = names
        self.index = index
        self.attacks = frozenset(pairs)
        self.targets = tuple(tuple(t) for t in fwd)
        self.attackers = tuple(tuple(t) for t in rev)
        self._hash = None

    @property
    def arguments(self) -> frozenset:
        return frozenset(self.names)

    def __len__(self) -> int:
        return len(self.names)

    def __contains__(self, name) -> bool:
        return name in self.index

    def __eq__(self, other) -> bool:
        if not isinstance(other, ArgumentationFramework):
            return NotImplemented
        return self.arguments == other.arguments and self.attacks == other.attacks

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.arguments, self.attacks))
        return self._hash

    def __repr__(self) -> str:
        return f"ArgumentationFramework({len(self.names)} arguments, {len(self.attacks)} attacks)"

    def __getstate__(self):
        return (self.names, sorted(self.attacks, key=lambda p: (self.index[p[0]], self.index[p[1]])))

    def __setstate__(self, state):
        names, attacks = state
        self.__init__(names, attacks)

    def sorted_attacks(self) -> list[tuple]:
        """Attacks ordered by (attacker index, target index)."""
        return [(self.names[i], self.names[j]) for i, ts in enumerate(self.targets) for j in ts]

    def indices_of(self, s: Iterable) -> list[int]:
        try:
            return [self.index[a] for a in s]
        except KeyError as exc:
            raise DomainError(f"argument {exc.args[0]!r} is not in the framework") from None

    def check_subset(self, s: Iterable) -> frozenset:
        s = frozenset(s)
        if not s <= self.index.keys():
            bad = sorted(map(str, s - self.index.keys()))
            raise DomainError(f"arguments not in the framework: {', '.join(bad)}")
        return s


def attackers_of(af: ArgumentationFramework, s: Iterable) -> frozenset:
    names, att = af.names, af.attackers
    return frozenset(names[b] for a in af.indices_of(s) for b in att[a])


def attacked_by(af: ArgumentationFramework, s: Iterable) -> frozenset:
    names, tgt = af.names, af.targets
    return frozenset(names[b] for a in af.indices_of(s) for b in tgt[a])


def restrict(af: ArgumentationFramework, i: Iterable) -> ArgumentationFramework:
    """Sub-framework induced by ``i``; argument order follows ``af``."""
    keep = af.check_subset(i)
    names = [n for n in af.names if n in keep]
    attacks = [(a, b) for (a, b) in af.sorted_attacks() if a in keep and b in keep]
    return ArgumentationFramework(names, attacks)


def is_conflict_free(af: ArgumentationFramework, t: Iterable) -> bool:
    idx = set(af.indices_of(t))
    return not any(b in idx for a in idx for b in af.targets[a])


def is_acceptable(af: ArgumentationFramework, a, t: Iterable) -> bool:
    (ai,) = af.indices_of([a])
    defeated = {b for c in af.indices_of(t) for b in af.targets[c]}
    return all(b in defeated for b in af.attackers[ai])


def is_admissible(af: ArgumentationFramework, t: Iterable) -> bool:
    t = af.check_subset(t)
    return is_conflict_free(af, t) and all(is_acceptable(af, a, t) for a in t)


class Labelling(Mapping):
    """Total map from an explicit domain to in/out/undec.

    Stored as three disjoint frozensets, which makes union of labellings over
    disjoint domains cheap. Hashable and compared by content.
    """

    __slots__ = ("in_", "out", "undec", "_hash")

    def __init__(self, in_: Iterable = (), out: Iterable = (), undec: Iterable = ()):
        self.in_ = frozenset(in_)
        self.out = frozenset(out)
        self.undec = frozenset(undec)
        if self.in_ & self.out or self.in_ & self.undec or self.out & self.undec:
            raise ValueError("an argument carries more than one label")
        self._hash = None

    @classmethod
    def from_mapping(cls, mapping: Mapping) -> Labelling:
        parts: dict[Label, list] = {IN: [], OUT: [], UNDEC: []}
        for arg, lab in mapping.items():
            parts[Label(lab)].append(arg)
        return cls(parts[IN], parts[OUT], parts[UNDEC])

    @property
    def domain(self) -> frozenset:
        return self.in_ | self.out | self.undec

    def __getitem__(self, arg) -> Label:
        if arg in self.in_:
            return IN
        if arg in self.out:
            return OUT
        if arg in self.undec:
            return UNDEC
        raise KeyError(arg)

    def __iter__(self) -> Iterator:
        yield from self.in_
        yield from self.out
        yield from self.undec

    def __len__(self) -> int:
        return len(self.in_) + len(self.out) + len(self.undec)

    def __eq__(self, other) -> bool:
        if isinstance(other, Labelling):
            return self.in_ == other.in_ and self.out == other.out and self.undec == other.undec
        return super().__eq__(other)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.in_, self.out, self.undec))
        return self._hash

    def __or__(self, other: Labelling) -> Labelling:
        if not self.domain.isdisjoint(other.domain):
            raise ValueError("cannot join labellings with overlapping domains")
        return Labelling(self.in_ | other.in_, self.out | other.out, self.undec | other.undec)

    def __reduce__(self):
        return (Labelling, (self.in_, self.out, self.undec))

    def __repr__(self) -> str:
        body = ", ".join(f"{a}:{self[a].value}" for a in sorted(self, key=str))
        return "{" + body + "}"


def ext2lab(af: ArgumentationFramework, t: Iterable) -> Labelling:
    t = af.check_subset(t)
    if not is_conflict_free(af, t):
        raise ValueError("ext2lab needs a conflict-free set")
    out = attacked_by(af, t)
    return Labelling(t, out, af.arguments - t - out)


def in_sets(labellings: Iterable[Labelling]) -> set[frozenset]:
    return {lab.in_ for lab in labellings}
