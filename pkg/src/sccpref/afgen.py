"""Seeded random frameworks with an exact number of strongly connected components.

Every component is a directed cycle plus random extra internal attacks.
Attacks between components only go forward along a hidden random order of
the components, so no two components can merge.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .apx import format_apx
from .framework import ArgumentationFramework

RNG_ALGORITHM = "numpy.PCG64(SeedSequence)"
MANIFEST_NAME = "manifest.tsv"
_COLUMNS = ("filename", "seed", "scc_count", "args_per_scc", "p_intra", "p_inter",
            "singleton_self_attack", "arguments", "attacks")


@dataclass(frozen=True)
class GenParams:
    scc_count: int
    args_per_scc: tuple[int, int]
    p_intra: float = 0.0
    p_inter: float = 0.0
    seed: int = 0
    singleton_self_attack: bool = False

    def __post_init__(self):
        lo, hi = self.args_per_scc
        if self.scc_count < 1:
            raise ValueError("scc_count must be positive")
        if lo < 1 or hi < lo:
            raise ValueError(f"bad args_per_scc range {self.args_per_scc}")
        for name in ("p_intra", "p_inter"):
            p = getattr(self, name)
            if not 0.0 <= p <= 1.0:
                raise ValueError(f"{name}={p} is not a probability")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must fit in 64 bits")


def generate(p: GenParams) -> ArgumentationFramework:
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence(p.seed)))
    lo, hi = p.args_per_scc
    sizes = rng.integers(lo, hi + 1, size=p.scc_count)
    starts = np.concatenate(([0], np.cumsum(sizes)))
    n = int(starts[-1])
    names = [f"a{i}" for i in range(n)]
    attacks: list[tuple[int, int]] = []
    for k in range(p.scc_count):
        base, m = int(starts[k]), int(sizes[k])
        if m == 1:
            if p.singleton_self_attack:
                attacks.append((base, base))
            continue
        attacks += [(base + i, base + (i + 1) % m) for i in range(m)]
        extra = rng.random((m, m)) < p.p_intra
        np.fill_diagonal(extra, False)
        for i in range(m):
            extra[i, (i + 1) % m] = False  # already on the cycle
        src, dst = np.nonzero(extra)
        attacks += [(base + int(i), base + int(j)) for i, j in zip(src, dst)]
    order = rng.permutation(p.scc_count)
    if p.p_inter > 0:
        for pos, k in enumerate(order[:-1]):
            later = order[pos + 1:]
            targets = np.concatenate([np.arange(starts[j], starts[j + 1]) for j in later])
            src_ids = np.arange(starts[k], starts[k + 1])
            hit = rng.random((len(src_ids), len(targets))) < p.p_inter
            si, ti = np.nonzero(hit)
            attacks += list(zip(src_ids[si].tolist(), targets[ti].tolist()))
    return ArgumentationFramework(names, [(names[a], names[b]) for a, b in attacks])


def _manifest_row(filename: str, p: GenParams, af: ArgumentationFramework) -> str:
    lo, hi = p.args_per_scc
    cells = (filename, p.seed, p.scc_count, f"{lo}-{hi}", repr(p.p_intra), repr(p.p_inter),
             int(p.singleton_self_attack), len(af), len(af.attacks))
    return "\t".join(map(str, cells))


def write_corpus(params: list[GenParams], directory: str | os.PathLike,
                 filenames: list[str] | None = None) -> Path:
    """Write one APX file per parameter set plus ``manifest.tsv``; return the manifest path."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    if filenames is None:
        filenames = [f"af{i:04d}.apx" for i in range(len(params))]
    rows = [f"# rng={RNG_ALGORITHM}", "# " + "\t".join(_COLUMNS)]
    for name, p in zip(filenames, params):
        af = generate(p)
        path = directory / name
        try:
            path.write_text(format_apx(af), encoding="utf-8")
        except OSError as exc:
            raise OSError(f"cannot write {path}: {exc}") from exc
        rows.append(_manifest_row(name, p, af))
    manifest = directory / MANIFEST_NAME
    try:
        manifest.write_text("\n".join(rows) + "\n", encoding="utf-8")
    except OSError as exc:
        raise OSError(f"cannot write {manifest}: {exc}") from exc
    return manifest


def read_manifest(path: str | os.PathLike) -> list[tuple[str, GenParams]]:
    entries = []
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        if not line.strip() or line.startswith("#"):
            continue
        cells = line.split("\t")
        if len(cells) != len(_COLUMNS):
            raise ValueError(f"manifest row has {len(cells)} columns, expected {len(_COLUMNS)}: {line!r}")
        lo, hi = cells[3].split("-")
        entries.append((cells[0], GenParams(
            scc_count=int(cells[2]), args_per_scc=(int(lo), int(hi)),
            p_intra=float(cells[4]), p_inter=float(cells[5]), seed=int(cells[1]),
            singleton_self_attack=bool(int(cells[6])),
        )))
    return entries


def regenerate(manifest: str | os.PathLike, directory: str | os.PathLike) -> Path:
    entries = read_manifest(manifest)
    return write_corpus([p for _, p in entries], directory, [name for name, _ in entries])


