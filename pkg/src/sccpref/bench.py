"""Timed solving under a cutoff, benchmark records and corpus runs."""

from __future__ import annotations

import _thread
import csv
import logging
import os
import re
import subprocess
import sys
import threading
import time
from concurrent.futures import ThreadPoolExecutor
from contextlib import contextmanager
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

from .apx import parse_apx
from .engine import PreferredEnumerator
from .framework import ArgumentationFramework
from .sat import SolverTimeout
from .scoring import ScoreReport, format_summary, ipc_score, summarise

log = logging.getLogger(__name__)

SUCCESS, TIMEOUT, OUT_OF_MEMORY, CRASHED = "success", "timeout", "out-of-memory", "crashed"
RECORD_FIELDS = ("instance", "config", "status", "seconds", "extensions")
WATCHDOG_GRACE = 5.0


@dataclass(frozen=True)
class BenchConfig:
    workers: int
    greedy: bool

    @property
    def label(self) -> str:
        return f"P{self.workers}{'G' if self.greedy else ''}"


@dataclass(frozen=True)
class BenchRecord:
    instance: str
    config: str
    status: str
    seconds: float
    extensions: int | None = None

    def __post_init__(self):
        if self.seconds < 0:
            raise ValueError("negative wall time")
        if (self.extensions is not None) != (self.status == SUCCESS):
            raise ValueError("extension count is recorded exactly for successful runs")


def parse_configs(text: str) -> list[BenchConfig]:
    configs = []
    for item in filter(None, (s.strip() for s in text.split(","))):
        m = re.fullmatch(r"P(\d+)(G?)", item, flags=re.IGNORECASE)
        if not m or int(m.group(1)) < 1:
            raise ValueError(f"bad configuration {item!r}; expected e.g. P1, P2G, P4")
        configs.append(BenchConfig(int(m.group(1)), bool(m.group(2))))
    if not configs:
        raise ValueError("no configurations given")
    return configs


@contextmanager
def watchdog(seconds: float | None):
    """Interrupt the main thread if the block overruns ``seconds``."""
    if seconds is None:
        yield
        return
    fired = threading.Event()

    def fire():
        fired.set()
        _thread.interrupt_main()

    timer = threading.Timer(seconds, fire)
    timer.daemon = True
    timer.start()
    try:
        yield
    except KeyboardInterrupt:
        if fired.is_set():
            raise SolverTimeout() from None
        raise
    finally:
        timer.cancel()


def timed_solve(af: ArgumentationFramework, config: BenchConfig, timeout: float | None):
    """Solve ``af`` under the cutoff; return ``(status, seconds, result or None)``.

    The clock covers SCC layout, grounded propagation, greedy precomputation
    and enumeration, not parsing.
    """
    start = time.perf_counter()
    deadline = None if timeout is None else time.time() + timeout
    result = None
    try:
        with watchdog(None if timeout is None else timeout + WATCHDOG_GRACE):
            with PreferredEnumerator(config.workers, greedy=config.greedy, deadline=deadline) as engine:
                result = engine.pref(af)
        status = SUCCESS
    except SolverTimeout:
        status = TIMEOUT
    except MemoryError:
        status = OUT_OF_MEMORY
    except Exception:
        log.exception("solver crashed")
        status = CRASHED
    elapsed = time.perf_counter() - start
    if status == SUCCESS and timeout is not None and elapsed > timeout:
        status, result = TIMEOUT, None
    return status, elapsed, result


def write_records(records: Iterable[BenchRecord], path: str | os.PathLike, append: bool = True) -> None:
    path = Path(path)
    new = not path.exists() or not append or path.stat().st_size == 0
    with open(path, "a" if append else "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        if new:
            writer.writerow(RECORD_FIELDS)
        for r in records:
            writer.writerow([r.instance, r.config, r.status, f"{r.seconds:.6f}",
                             "" if r.extensions is None else r.extensions])


def read_records(path: str | os.PathLike) -> list[BenchRecord]:
    with open(path, newline="", encoding="utf-8") as fh:
        return [
            BenchRecord(row["instance"], row["config"], row["status"], float(row["seconds"]),
                        int(row["extensions"]) if row["extensions"] else None)
            for row in csv.DictReader(fh)
        ]


def times_table(records: Iterable[BenchRecord]) -> dict[str, dict[str, tuple[str, float]]]:
    table: dict[str, dict[str, tuple[str, float]]] = {}
    for r in records:
        table.setdefault(r.instance, {})[r.config] = (r.status, r.seconds)
    return table


@dataclass
class BenchOutcome:
    records: list[BenchRecord]
    report: ScoreReport
    summary: str
    indicative: bool = False


def _subprocess_run(path: Path, config: BenchConfig, timeout: float) -> BenchRecord:
    """One (instance, configuration) run in a child process; used for parallel dispatch."""
    import tempfile

    with tempfile.TemporaryDirectory() as tmp:
        rec_path = Path(tmp) / "rec.csv"
        cmd = [sys.executable, "-m", "sccpref", "solve", "-i", str(path), "--workers", str(config.workers),
               "--timeout-secs", str(timeout), "--output", os.devnull, "--records", str(rec_path),
               "--config-label", config.label]
        if config.greedy:
            cmd.append("--greedy")
        try:
            subprocess.run(cmd, timeout=timeout + 2 * WATCHDOG_GRACE, capture_output=True)
        except subprocess.TimeoutExpired:
            return BenchRecord(path.name, config.label, TIMEOUT, timeout)
        if rec_path.exists():
            recs = read_records(rec_path)
            if recs:
                return recs[-1]
        return BenchRecord(path.name, config.label, CRASHED, 0.0)


def run_bench(corpus: str | os.PathLike, configs: list[BenchConfig], timeout: float = 900.0,
              parallel_instances: int = 1) -> BenchOutcome:
    corpus = Path(corpus)
    if not corpus.is_dir():
        raise FileNotFoundError(f"corpus directory {corpus} does not exist")
    files = sorted(corpus.glob("*.apx"))
    if not files:
        raise FileNotFoundError(f"no .apx instances in {corpus}")
    records: list[BenchRecord] = []
    if parallel_instances > 1:
        jobs = [(f, cfg) for f in files for cfg in configs]
        with ThreadPoolExecutor(parallel_instances) as pool:
            records = list(pool.map(lambda job: _subprocess_run(job[0], job[1], timeout), jobs))
    else:
        for f in files:
            af = parse_apx(f.read_text(encoding="utf-8"))
            for cfg in configs:
                status, seconds, result = timed_solve(af, cfg, timeout)
                records.append(BenchRecord(f.name, cfg.label, status, seconds,
                                           len(result) if result is not None else None))
                log.info("%s %s %s %.3fs", f.name, cfg.label, status, seconds)
    table = times_table(records)
    report = ipc_score(table)
    summary = format_summary(summarise(table, timeout))
    if parallel_instances > 1:
        summary += "note: instances ran concurrently; timings are indicative only\n"
    return BenchOutcome(records, report, summary, indicative=parallel_instances > 1)
