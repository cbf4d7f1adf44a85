import json
import random

import pytest

from bmaps import harness
from bmaps.harness import (
    CacheMismatch,
    SuiteReport,
    htable,
    run_suite,
    spot_check,
    suite_jack,
    suite_map_series,
    suite_unicellular,
)
from bmaps.hseries import extract_h
from bmaps.exactalg import BETA, Poly


def test_report_json_is_deterministic():
    a = run_suite("marginal", 3)
    b = run_suite("marginal", 3)
    assert a.dumps() == b.dumps()
    assert "timings" not in a.to_json()
    assert "timings" in a.to_json(include_timings=True)


def test_failures_name_key_and_values():
    rep = SuiteReport("demo", (1, 1))
    c = rep.check("h(1) = census", 2)
    c.failures.append("(2;2;2): h(1) = 1, census = 0")
    assert not rep.passed
    assert rep.failures() == ["h(1) = census [n=2]: (2;2;2): h(1) = 1, census = 0"]
    assert "FAIL (1)" in rep.summary_lines()[0]


def test_small_suites_pass():
    assert suite_jack(3).passed
    assert suite_map_series(3).passed
    assert suite_unicellular(4).passed


def test_map_series_examples():
    table = htable(2)
    total, orientable = harness.audited_census(2)
    key = ((2,), (2,), (2,))
    assert (table[key](0), table[key](1)) == (0, 1)
    assert (orientable[key], total[key]) == (0, 1)
    key = ((2,), (2,), (1, 1))
    assert table[key](0) == 1 == orientable[key]


def test_experimental_is_observation_only():
    rep = run_suite("experimental", 2)
    assert rep.passed and not rep.checks
    assert len(rep.observations) == 1 + 8
    two = [o for o in rep.observations if o["triple"] == "(2;2;2)"][0]
    assert two["H_eta(-1) = h(-1)"] and two["unhandled"] == 1


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_suite("nope", 2)


def test_disk_cache_round_trip(tmp_path, monkeypatch):
    monkeypatch.setenv(harness.CACHE_ENV, str(tmp_path))
    first = htable(3)
    files = list(tmp_path.glob("hseries-*.json"))
    assert len(files) == 1 and not list(tmp_path.glob(".tmp-*"))
    second = htable(3)
    for n in range(1, 4):
        assert first.entries[n] == second.entries[n] == extract_h(3).entries[n]


def test_corrupted_cache_is_recomputed(tmp_path, monkeypatch):
    monkeypatch.setenv(harness.CACHE_ENV, str(tmp_path))
    htable(2)
    (path,) = tmp_path.glob("hseries-*.json")
    data = json.loads(path.read_text())
    for block in data["degrees"]:
        for row in block["entries"]:
            row["h"] = ["7/1"]
    path.write_text(json.dumps(data))
    fresh = htable(2)
    assert fresh.entries[2] == extract_h(2).entries[2]


def test_spot_check_detects_tampering():
    table = extract_h(2)
    for n in (1, 2):
        for k in table.entries[n]:
            table.entries[n][k] = table.entries[n][k] + Poly([1], BETA)
    with pytest.raises(CacheMismatch):
        spot_check(table, random.Random(0))
