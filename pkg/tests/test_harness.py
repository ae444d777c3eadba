import sys
import os
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))
"""
Tests for the verification harness and suites
"""

import pytest
from germlab.config.loader import default_config
from germlab.pipeline.harness import all_ok, run_suite, run_suites
from germlab.pipeline.suites import ALIASES, SUITES, CaseRecorder, expand_names
from germlab.utils.errors import InvalidInputError, InvariantViolation


class TestCaseRecorder:
    """Test check bookkeeping"""

    def test_counts_and_failures(self):
        rec = CaseRecorder("demo")
        assert rec.check("ok", True)
        assert not rec.equal("sum", 4, 5, (2, 2))
        assert rec.cases == 2
        assert len(rec.failures) == 1
        failure = rec.failures[0]
        assert failure.case == "demo/sum"
        assert (failure.inputs, failure.expected, failure.actual) == ("(2, 2)", "4", "5")

    def test_guard_records_errors(self):
        rec = CaseRecorder("demo")
        with rec.guard("boom", (1, 2)):
            raise InvariantViolation("broken")
        assert rec.failures[0].case == "demo/boom"
        assert "InvariantViolation: broken" in rec.failures[0].actual

    def test_guard_lets_other_errors_through(self):
        rec = CaseRecorder("demo")
        with pytest.raises(KeyError):
            with rec.guard("boom", ()):
                raise KeyError("x")


class TestSuiteNames:
    """Test suite registry and aliases"""

    def test_registry(self):
        assert sorted(SUITES) == [
            "lem4-6", "prop1-1", "stmt3-2", "stmt5-3", "thm0-2", "thm0-3", "thm0-4", "thm4-4",
        ]
        assert ALIASES["all"] == sorted(SUITES)

    def test_expand(self):
        assert expand_names(["blowup", "tree", "thm4-4"]) == ["lem4-6", "prop1-1", "thm4-4"]

    def test_unknown(self):
        with pytest.raises(InvalidInputError, match="unknown suite"):
            expand_names(["nope"])


class TestSmallSweeps:
    """Every suite passes at a small bound"""

    @pytest.mark.parametrize("name,bound", [
        ("prop1-1", 40),
        ("thm0-2", 30),
        ("thm0-3", 15),
        ("stmt3-2", 40),
        ("thm4-4", 20),
        ("lem4-6", 40),
        ("stmt5-3", 5),
        ("thm0-4", 9),
    ])
    def test_suite(self, name, bound):
        report = run_suite(name, bound, max_degree=8)
        assert report.cases > 0
        assert report.failures == []
        assert report.ok

    def test_reports_sorted_regardless_of_threads(self):
        names = ["tree", "chains", "lem4-6"]
        single = run_suites(names, bound=20, threads=1)
        pooled = run_suites(names, bound=20, threads=3)
        assert [r.suite for r in single] == ["lem4-6", "prop1-1", "stmt3-2"]
        assert [(r.suite, r.cases) for r in pooled] == [(r.suite, r.cases) for r in single]
        assert all_ok(pooled)

    def test_exhaustive_suites_capped(self):
        assert SUITES["stmt5-3"].max_bound == 7
        assert SUITES["thm0-4"].max_bound == 12
        assert SUITES["prop1-1"].max_bound is None
        report = run_suite("stmt5-3", 100, max_degree=8)
        assert report.bound == 7
        assert report.ok

    def test_config_bounds_used(self):
        cfg = default_config()
        cfg.verify.bounds["stmt5-3"] = 4
        reports = run_suites(["stmt5-3"], cfg=cfg)
        assert reports[0].bound == 4


@pytest.mark.slow
class TestDefaultSweeps:
    """Suites at their configured default bounds"""

    @pytest.mark.parametrize("name", sorted(SUITES))
    def test_default_bound(self, name):
        cfg = default_config()
        report = run_suite(name, cfg.verify.bound_for(name), cfg.enumeration.max_degree)
        assert report.failures == []
