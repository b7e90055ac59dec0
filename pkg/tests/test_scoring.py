import math

import pytest

from sccpref.scoring import format_summary, ipc_raw, ipc_score, summarise


def test_raw_examples():
    assert ipc_raw(5.0, 5.0) == 1.0
    assert ipc_raw(50.0, 5.0) == pytest.approx(0.5, abs=1e-9)
    assert ipc_raw(0.005, 0.001) == 1.0
    assert ipc_raw(3.0, 1.0, success=False) == 0.0


def test_raw_is_monotone_in_time():
    times = [0.02 * 1.3 ** k for k in range(40)]
    scores = [ipc_raw(t, times[0]) for t in times]
    assert all(a >= b for a, b in zip(scores, scores[1:]))


def test_single_success_scores_100():
    report = ipc_score({"i1": {"P1": ("success", 1.0)}})
    assert report.normalised == {"P1": 100.0}


def test_two_configs():
    report = ipc_score({"i1": {"P1": ("success", 5.0), "P4": ("success", 50.0)}})
    assert report.normalised["P1"] == pytest.approx(100.0)
    assert report.normalised["P4"] == pytest.approx(50.0)


def test_failing_configuration_scores_zero():
    times = {f"i{k}": {"P1": ("success", 2.0), "P2": ("timeout", 900.0)} for k in range(3)}
    report = ipc_score(times)
    assert report.normalised == {"P1": 100.0, "P2": 0.0}
    assert all(r["P2"] == 0.0 for r in report.raw.values())


def test_unsolved_instance_contributes_zero():
    times = {"a": {"P1": ("success", 1.0)}, "b": {"P1": ("crashed", 0.1)}}
    assert ipc_score(times).normalised["P1"] == 50.0


def test_summary_table():
    times = {
        "a": {"P1": ("success", 10.0), "P2": ("success", 4.0)},
        "b": {"P1": ("success", 6.0), "P2": ("timeout", 900.0)},
    }
    rows = {r.config: r for r in summarise(times, cutoff=900.0)}
    assert rows["P1"].success_pct == 100.0 and rows["P2"].success_pct == 50.0
    assert rows["P1"].best_pct == 50.0 and rows["P2"].best_pct == 50.0
    assert rows["P2"].avg_runtime_cutoff == pytest.approx(452.0)
    assert rows["P2"].avg_runtime_solved == pytest.approx(4.0)
    assert rows["P2"].max_speedup == pytest.approx(2.5)
    assert rows["P1"].max_speedup is None
    assert rows["P2"].ipc == pytest.approx(50.0)
    assert math.isclose(rows["P1"].ipc, 100 * (1 / (1 + math.log10(2.5)) + 1) / 2)
    text = format_summary(list(rows.values()))
    assert "IPC score" in text and "Max speedup vs P1" in text and "--" in text
