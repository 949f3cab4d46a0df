from __future__ import annotations

import pandas as pd
import pytest

from core.braid import BraidMonoid
from core.config import Settings
from core.klein import KleinMonoid
from core.oracle import BfsOracle
from core.toy import CyclicGroup, FreeAbelianMonoid
from core.verify import SUITES, run_verify
from data_logger import DataLogger

FAST = Settings(trials=8)


@pytest.mark.parametrize("suite", SUITES)
def test_braid3_suites_pass(suite):
    report = run_verify(BraidMonoid(3), suite, seed=7, settings=FAST)
    assert report.passed, report.lines()
    assert [r.name for r in report.results] == [suite]
    assert report.results[0].checked > 0


def test_uniq_on_cyclic_group_sees_every_unit():
    report = run_verify(CyclicGroup(6), "uniq", settings=FAST)
    (result,) = report.results
    assert result.passed
    assert result.checked == 36
    assert result.notes == ["lcm-set size 6"]


TRIVIAL_UNITS = [BraidMonoid(3), BraidMonoid(4), KleinMonoid(), FreeAbelianMonoid(3)]


@pytest.mark.parametrize("monoid", TRIVIAL_UNITS, ids=lambda m: m.key)
def test_uniq_finds_single_lcms(monoid):
    report = run_verify(monoid, "uniq", seed=3, trials=200)
    (result,) = report.results
    assert result.passed, result.failures
    assert result.checked == 200
    assert result.notes == ["lcm-set size 1"]


def test_eq123_checks_lcms_of_short_fractions(monkeypatch):
    searched = []
    lcm_set = BfsOracle.lcm_set

    def counting(self, a, b):
        found = lcm_set(self, a, b)
        searched.append(len(found))
        return found

    monkeypatch.setattr(BfsOracle, "lcm_set", counting)
    report = run_verify(BraidMonoid(3), "eq123", seed=4, trials=40)
    assert report.passed, report.lines()
    assert searched and set(searched) == {1}


@pytest.mark.parametrize("monoid", [KleinMonoid(), FreeAbelianMonoid(2), CyclicGroup(6)], ids=lambda m: m.key)
def test_all_suites_pass(monoid):
    report = run_verify(monoid, "all", seed=1, settings=FAST)
    assert report.passed, report.lines()
    assert [r.name for r in report.results] == list(SUITES)


def test_torsion_suite_on_cyclic_group_expects_witnesses():
    report = run_verify(CyclicGroup(6), "torsion", settings=FAST)
    # 36 ordered pairs minus the 6 with a == b
    assert report.results[0].checked == 30
    assert report.passed


def test_reports_are_deterministic():
    first = run_verify(BraidMonoid(3), "all", seed=11, settings=FAST).lines()
    second = run_verify(BraidMonoid(3), "all", seed=11, settings=FAST).lines()
    assert first == second
    assert first[0] == "verify braid:3 suite=all seed=11 trials=8"
    assert first[-1] == "result: pass"


def test_flags_override_settings():
    report = run_verify(BraidMonoid(3), "rlcm", seed=2, trials=3)
    assert report.seed == 2 and report.trials == 3
    assert report.results[0].checked == 3


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_verify(BraidMonoid(3), "nosuch")


def test_trial_records_go_to_the_sink(tmp_path):
    sink = DataLogger(tmp_path / "trials.csv")
    report = run_verify(BraidMonoid(3), "all", seed=5, settings=FAST, sink=sink)
    assert len(sink.records) == sum(r.checked for r in report.results)

    summary = sink.summary()
    assert list(summary["suite"]) == list(SUITES)
    assert (summary["checked"] == summary["passed"]).all()

    path = sink.flush()
    assert path == tmp_path / "trials.csv"
    assert sink.records == []
    table = pd.read_csv(path)
    assert list(table.columns) == ["monoid", "suite", "case", "passed", "repro"]
    assert len(table) == sum(r.checked for r in report.results)
    assert set(table["monoid"]) == {"braid:3"}


def test_flush_appends_without_repeating_the_header(tmp_path):
    sink = DataLogger(tmp_path / "trials.csv")
    assert sink.flush() is None
    sink.log({"monoid": "klein", "suite": "uniq", "case": 0, "passed": True, "repro": ""})
    sink.flush()
    sink.log({"monoid": "klein", "suite": "uniq", "case": 1, "passed": False, "repro": "x"})
    sink.flush()
    table = pd.read_csv(tmp_path / "trials.csv")
    assert list(table["case"]) == [0, 1]


def test_empty_summary():
    summary = DataLogger().summary()
    assert summary.empty
    assert list(summary.columns) == ["monoid", "suite", "checked", "passed"]
