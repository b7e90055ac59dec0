import csv

import pytest

from sccpref.bench import BenchConfig, BenchRecord, parse_configs, read_records, timed_solve, watchdog
from sccpref.cli import main
from sccpref.sat import SolverTimeout
from conftest import AF


@pytest.fixture
def mutual(tmp_path):
    path = tmp_path / "f.apx"
    path.write_text("arg(a).\narg(b).\natt(a,b).\natt(b,a).\n")
    return path


def test_solve_prints_extensions(mutual, capsys):
    assert main(["solve", "-i", str(mutual), "--workers", "4"]) == 0
    assert capsys.readouterr().out == "EXTENSIONS: 2\n[a]\n[b]\n"


def test_solve_writes_output_and_records(mutual, tmp_path):
    out, rec = tmp_path / "out.txt", tmp_path / "rec.csv"
    assert main(["solve", "-i", str(mutual), "--greedy", "--output", str(out), "--records", str(rec)]) == 0
    assert out.read_text() == "EXTENSIONS: 2\n[a]\n[b]\n"
    main(["solve", "-i", str(mutual), "--records", str(rec), "--output", str(out)])
    rows = list(csv.DictReader(rec.open()))
    assert [r["config"] for r in rows] == ["P1G", "P1"]
    assert all(r["status"] == "success" and r["extensions"] == "2" for r in rows)


def test_solve_parse_error(tmp_path, capsys):
    bad = tmp_path / "bad.apx"
    bad.write_text("att(a,b).\n")
    assert main(["solve", "-i", str(bad)]) == 2
    assert "line 1" in capsys.readouterr().err


def test_solve_missing_file(tmp_path):
    assert main(["solve", "-i", str(tmp_path / "nope.apx")]) == 2


def test_solve_timeout_suppresses_output(mutual, capsys):
    assert main(["solve", "-i", str(mutual), "--timeout-secs", "0"]) == 3
    assert capsys.readouterr().out == ""


def test_solve_rejects_zero_workers(mutual):
    assert main(["solve", "-i", str(mutual), "--workers", "0"]) == 2


def test_default_cutoff_is_900(mutual):
    from sccpref.cli import build_parser
    assert build_parser().parse_args(["solve", "-i", str(mutual)]).timeout_secs == 900.0


def test_dump_dimacs(mutual, tmp_path):
    dump = tmp_path / "f.cnf"
    assert main(["solve", "-i", str(mutual), "--dump-dimacs", str(dump), "--output", str(tmp_path / "o")]) == 0
    assert dump.read_text().startswith("p cnf 6 ")


def test_gen_and_regenerate(tmp_path, capsys):
    assert main(["gen", "--scc-count", "3", "--args-per-scc", "1-1", "--p-intra", "0", "--output",
                 str(tmp_path / "c")]) == 0
    assert (tmp_path / "c" / "af0000.apx").read_text() == "arg(a0).\narg(a1).\narg(a2).\n"
    assert main(["gen", "--count", "5", "--seed", "9", "--output", str(tmp_path / "d")]) == 0
    assert len(list((tmp_path / "d").glob("*.apx"))) == 5
    assert main(["gen", "--from-manifest", str(tmp_path / "d" / "manifest.tsv"), "--output",
                 str(tmp_path / "e")]) == 0
    for f in (tmp_path / "d").iterdir():
        assert f.read_bytes() == (tmp_path / "e" / f.name).read_bytes()


def test_gen_invalid_range(tmp_path):
    assert main(["gen", "--args-per-scc", "5-2", "--output", str(tmp_path)]) == 2


def test_bench_single_instance(mutual, tmp_path, capsys):
    rec = tmp_path / "rec.csv"
    assert main(["bench", "--corpus", str(mutual.parent), "--configs", "P1,P2G", "--records", str(rec)]) == 0
    out = capsys.readouterr().out
    assert "IPC score" in out
    records = read_records(rec)
    assert {r.config for r in records} == {"P1", "P2G"}
    assert all(r.status == "success" and r.extensions == 2 for r in records)


def test_bench_parallel_dispatch_is_flagged(mutual, capsys):
    assert main(["bench", "--corpus", str(mutual.parent), "--configs", "P1", "--parallel-instances", "2"]) == 0
    assert "indicative" in capsys.readouterr().out


def test_bench_missing_corpus(tmp_path):
    assert main(["bench", "--corpus", str(tmp_path / "none")]) == 4


def test_bench_bad_config(mutual):
    assert main(["bench", "--corpus", str(mutual.parent), "--configs", "Q3"]) == 2


def test_parse_configs():
    assert parse_configs("P1, P2G,p4") == [BenchConfig(1, False), BenchConfig(2, True), BenchConfig(4, False)]
    assert BenchConfig(4, True).label == "P4G"


def test_bench_record_invariants():
    with pytest.raises(ValueError):
        BenchRecord("i", "P1", "success", -1.0, 1)
    with pytest.raises(ValueError):
        BenchRecord("i", "P1", "timeout", 1.0, 3)
    with pytest.raises(ValueError):
        BenchRecord("i", "P1", "success", 1.0, None)


def test_timed_solve_statuses():
    status, seconds, result = timed_solve(AF("a<>b"), BenchConfig(1, False), 10)
    assert status == "success" and len(result) == 2 and seconds >= 0
    assert timed_solve(AF("a<>b"), BenchConfig(1, False), 0)[0] == "timeout"


def test_watchdog_interrupts_busy_loop():
    with pytest.raises(SolverTimeout):
        with watchdog(0.2):
            while True:
                pass
