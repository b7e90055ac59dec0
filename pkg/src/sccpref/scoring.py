"""IPC speed score and the per-configuration summary table."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping

SUCCESS = "success"
FAST_ENOUGH = 0.01  # seconds; anything faster scores 1


@dataclass
class ScoreReport:
    normalised: dict[str, float]
    raw: dict[str, dict[str, float]]  # instance -> config -> raw score


def ipc_raw(seconds: float, best: float, success: bool = True) -> float:
    if not success:
        return 0.0
    if seconds < FAST_ENOUGH:
        return 1.0
    if best <= 0:
        best = FAST_ENOUGH
    return 1.0 / (1.0 + math.log10(seconds / best))


def ipc_score(times: Mapping[str, Mapping[str, tuple[str, float]]]) -> ScoreReport:
    """Score ``instance -> config -> (status, seconds)``.

    Each instance contributes at most 1 per configuration; the normalised
    score is 100 times the mean over all instances.
    """
    configs = sorted({cfg for runs in times.values() for cfg in runs})
    raw: dict[str, dict[str, float]] = {}
    for inst, runs in times.items():
        ok = [t for status, t in runs.values() if status == SUCCESS]
        best = min(ok) if ok else None
        raw[inst] = {
            cfg: ipc_raw(t, best, status == SUCCESS) if best is not None else 0.0
            for cfg, (status, t) in runs.items()
        }
    n = len(times)
    normalised = {
        cfg: 100.0 * sum(r.get(cfg, 0.0) for r in raw.values()) / n if n else 0.0
        for cfg in configs
    }
    return ScoreReport(normalised, raw)


@dataclass
class ConfigSummary:
    config: str
    ipc: float
    success_pct: float
    best_pct: float
    # over instances some configuration solved; failures count at the cutoff
    avg_runtime_cutoff: float | None
    # over the same instances, but only this configuration's own successes
    avg_runtime_solved: float | None
    max_speedup: float | None = None


def summarise(times: Mapping[str, Mapping[str, tuple[str, float]]], cutoff: float,
              baseline: str = "P1") -> list[ConfigSummary]:
    report = ipc_score(times)
    configs = sorted(report.normalised, key=_config_key)
    n = len(times)
    solved_somewhere = [i for i, runs in times.items()
                        if any(s == SUCCESS for s, _ in runs.values())]
    rows = []
    for cfg in configs:
        runs = [times[i].get(cfg) for i in times]
        successes = sum(1 for r in runs if r and r[0] == SUCCESS)
        best = 0
        for i in solved_somewhere:
            r = times[i].get(cfg)
            t_star = min(t for s, t in times[i].values() if s == SUCCESS)
            if r and r[0] == SUCCESS and r[1] == t_star:
                best += 1
        with_cutoff = [times[i][cfg][1] if times[i].get(cfg, ("", 0))[0] == SUCCESS else cutoff
                       for i in solved_somewhere]
        own = [times[i][cfg][1] for i in solved_somewhere
               if times[i].get(cfg, ("", 0))[0] == SUCCESS]
        speedups = []
        if cfg != baseline:
            for i in times:
                base, mine = times[i].get(baseline), times[i].get(cfg)
                if base and mine and base[0] == SUCCESS and mine[0] == SUCCESS and mine[1] > 0:
                    speedups.append(base[1] / mine[1])
        rows.append(ConfigSummary(
            config=cfg,
            ipc=report.normalised[cfg],
            success_pct=100.0 * successes / n if n else 0.0,
            best_pct=100.0 * best / n if n else 0.0,
            avg_runtime_cutoff=sum(with_cutoff) / len(with_cutoff) if with_cutoff else None,
            avg_runtime_solved=sum(own) / len(own) if own else None,
            max_speedup=max(speedups) if speedups else None,
        ))
    return rows


def _config_key(label: str):
    digits = "".join(ch for ch in label if ch.isdigit())
    return (int(digits) if digits else 0, label)


def format_summary(rows: list[ConfigSummary]) -> str:
    def fmt(x, pattern=".1f"):
        return "--" if x is None else format(x, pattern)

    header = ["", *(r.config for r in rows)]
    table = [
        ["IPC score", *(fmt(r.ipc) for r in rows)],
        ["% success", *(fmt(r.success_pct) for r in rows)],
        ["% best", *(fmt(r.best_pct) for r in rows)],
        ["Avg runtime (fail=cutoff)", *(fmt(r.avg_runtime_cutoff, ".3f") for r in rows)],
        ["Avg runtime (own successes)", *(fmt(r.avg_runtime_solved, ".3f") for r in rows)],
        ["Max speedup vs P1", *(fmt(r.max_speedup, ".2f") for r in rows)],
    ]
    widths = [max(len(str(row[i])) for row in [header, *table]) for i in range(len(header))]
    lines = ["  ".join(str(c).rjust(w) if j else str(c).ljust(w) for j, (c, w) in enumerate(zip(row, widths)))
             for row in [header, *table]]
    return "\n".join(lines) + "\n"
