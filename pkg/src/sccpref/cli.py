"""Command line: ``solve``, ``gen`` and ``bench``."""

from __future__ import annotations

import argparse
import logging
import sys
from contextlib import nullcontext
from pathlib import Path

import numpy as np

from .afgen import GenParams, regenerate, write_corpus
from .apx import ApxParseError, format_extensions, parse_apx
from .basepref import encode_complete_in
from .bench import (SUCCESS, TIMEOUT, BenchConfig, BenchRecord, parse_configs, run_bench,
                    timed_solve, write_records)

EXIT_OK, EXIT_PARSE, EXIT_TIMEOUT, EXIT_INTERNAL = 0, 2, 3, 4

log = logging.getLogger("sccpref")


def _open_out(path: str | None):
    if path is None or path == "-":
        return nullcontext(sys.stdout)
    return open(path, "w", encoding="utf-8")


def cmd_solve(args) -> int:
    try:
        text = Path(args.input).read_text(encoding="utf-8")
        af = parse_apx(text)
    except ApxParseError as exc:
        print(f"{args.input}: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (OSError, UnicodeDecodeError) as exc:
        print(f"{args.input}: {exc}", file=sys.stderr)
        return EXIT_PARSE
    if args.dump_dimacs:
        Path(args.dump_dimacs).write_text(encode_complete_in(af).to_dimacs(), encoding="utf-8")
    config = BenchConfig(args.workers, args.greedy)
    status, seconds, result = timed_solve(af, config, args.timeout_secs)
    record = BenchRecord(Path(args.input).name, args.config_label or config.label, status, seconds,
                         len(result) if result is not None else None)
    if args.records:
        write_records([record], args.records)
    print(f"c {record.instance} {record.config} {record.status} {record.seconds:.3f}s", file=sys.stderr)
    if status == SUCCESS:
        with _open_out(args.output) as out:
            out.write(format_extensions(result))
        return EXIT_OK
    return EXIT_TIMEOUT if status == TIMEOUT else EXIT_INTERNAL


def _range(text: str) -> tuple[int, int]:
    lo, _, hi = text.partition("-")
    return int(lo), int(hi or lo)


def cmd_gen(args) -> int:
    if args.from_manifest:
        manifest = regenerate(args.from_manifest, args.output)
        print(manifest)
        return EXIT_OK
    seq = np.random.SeedSequence(args.seed)
    seeds = [int(s.generate_state(1, dtype=np.uint64)[0]) for s in seq.spawn(args.count)] \
        if args.count > 1 else [args.seed]
    try:
        params = [GenParams(args.scc_count, _range(args.args_per_scc), args.p_intra, args.p_inter, s,
                            args.singleton_self_attack) for s in seeds]
    except ValueError as exc:
        print(f"invalid parameters: {exc}", file=sys.stderr)
        return EXIT_PARSE
    manifest = write_corpus(params, args.output)
    print(manifest)
    return EXIT_OK


def cmd_bench(args) -> int:
    try:
        configs = parse_configs(args.configs)
    except ValueError as exc:
        print(exc, file=sys.stderr)
        return EXIT_PARSE
    try:
        outcome = run_bench(args.corpus, configs, args.timeout_secs, args.parallel_instances)
    except FileNotFoundError as exc:
        print(exc, file=sys.stderr)
        return EXIT_INTERNAL
    if args.records:
        write_records(outcome.records, args.records, append=False)
    with _open_out(args.output) as out:
        out.write(outcome.summary)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sccpref",
                                     description="Parallel enumeration of preferred extensions.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="enumerate preferred extensions of one framework")
    solve.add_argument("-i", "--input", required=True)
    solve.add_argument("--format", choices=["apx"], default="apx")
    solve.add_argument("--workers", type=int, default=1)
    solve.add_argument("--greedy", action="store_true")
    solve.add_argument("--timeout-secs", type=float, default=900.0)
    solve.add_argument("--output", default="-")
    solve.add_argument("--records", help="append a CSV benchmark record here")
    solve.add_argument("--config-label", help=argparse.SUPPRESS)
    solve.add_argument("--dump-dimacs", metavar="PATH",
                       help="write the complete-labelling clause set in DIMACS form")
    solve.set_defaults(func=cmd_solve)

    gen = sub.add_parser("gen", help="generate random frameworks")
    gen.add_argument("--scc-count", type=int, default=10)
    gen.add_argument("--args-per-scc", default="5-10", help="MIN-MAX arguments per component")
    gen.add_argument("--p-intra", type=float, default=0.1)
    gen.add_argument("--p-inter", type=float, default=0.0)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--count", type=int, default=1)
    gen.add_argument("--singleton-self-attack", action="store_true")
    gen.add_argument("--output", required=True, help="corpus directory")
    gen.add_argument("--from-manifest", metavar="PATH", help="regenerate the corpus a manifest describes")
    gen.set_defaults(func=cmd_gen)

    bench = sub.add_parser("bench", help="run configurations over a corpus and score them")
    bench.add_argument("--corpus", required=True)
    bench.add_argument("--configs", default="P1,P2,P2G,P4,P4G")
    bench.add_argument("--timeout-secs", type=float, default=900.0)
    bench.add_argument("--records", help="write all BenchRecords as CSV")
    bench.add_argument("--output", default="-")
    bench.add_argument("--parallel-instances", type=int, default=1,
                       help="run this many instances at once (timings become indicative)")
    bench.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    if getattr(args, "workers", 1) < 1:
        print("--workers must be at least 1", file=sys.stderr)
        return EXIT_PARSE
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
