import json
import os
import sys
import tempfile
import unittest
from pathlib import Path
from unittest import mock

# Add project root to sys.path so we can import tableau_forge
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from tableau_forge import config as cfg
from tableau_forge.core import sweep
from tableau_forge.core.errors import InvalidParametersError, NonIntegerResultError, ParseError
from tableau_forge.core.sweep import (
    FAIL,
    PASS,
    SKIPPED_CAP,
    SweepConfig,
    SweepSummary,
    VerificationRecord,
    check_tuple,
    default_jobs,
    run_sweep,
    write_report,
)
from tableau_forge.theorems import CheckSettings, get_theorem

RHO_RANGES = {"n": (1, 1), "a": (0, 1), "b": (1, 1), "c": (1, 1), "d": (1, 1)}
RHO_PARAMS = {"n": 1, "a": 1, "b": 1, "c": 1, "d": 1}


class _InlinePool:
    """Stands in for ProcessPoolExecutor; runs every task in this process."""

    instances = []

    def __init__(self, max_workers):
        self.max_workers = max_workers
        _InlinePool.instances.append(self)

    def __enter__(self):
        return self

    def __exit__(self, *exc):
        return False

    def map(self, fn, tasks, chunksize=1):
        return map(fn, tasks)


class TestSweepConfig(unittest.TestCase):

    def test_normalises_identifier_and_order(self):
        config = SweepConfig("RHO", {"d": (1, 1), "c": (1, 1), "b": (1, 1), "a": (1, 1), "n": (1, 2)})
        self.assertEqual(config.theorem, "rho")
        self.assertEqual(list(config.ranges), ["n", "a", "b", "c", "d"])

    def test_default_ranges_fill_gaps(self):
        config = SweepConfig("q-selberg", {"n": (1, 1)})
        self.assertEqual(config.ranges["alpha"], (1, 3))
        self.assertEqual(config.ranges["n"], (1, 1))

    def test_missing_range(self):
        with self.assertRaises(ParseError):
            SweepConfig("rho", {"n": (1, 1)})

    def test_unknown_parameter(self):
        with self.assertRaises(ParseError):
            SweepConfig("macmahon", {"a": (1, 1), "b": (1, 1), "c": (1, 1), "z": (0, 0)})

    def test_unknown_theorem(self):
        with self.assertRaises(InvalidParametersError):
            SweepConfig("nope")

    def test_bad_jobs_and_trunc(self):
        with self.assertRaises(ParseError):
            SweepConfig("rho", RHO_RANGES, jobs=0)
        with self.assertRaises(ParseError):
            SweepConfig("rho", RHO_RANGES, trunc=-1)

    def test_from_mapping(self):
        config = SweepConfig.from_mapping({
            "theorem": "macmahon", "a": "1..2", "b": "1", "c": "0..1",
            "trunc": "5", "cap": "10", "jobs": "1", "output": "out.jsonl", "timings": "yes",
        })
        self.assertEqual(config.ranges, {"a": (1, 2), "b": (1, 1), "c": (0, 1)})
        self.assertEqual((config.trunc, config.cap, config.jobs), (5, 10, 1))
        self.assertEqual(config.output, Path("out.jsonl"))
        self.assertTrue(config.timings)
        self.assertEqual(config.settings, CheckSettings(trunc=5, cap=10))

    def test_from_mapping_errors(self):
        with self.assertRaises(ParseError):
            SweepConfig.from_mapping({"a": "1"})
        with self.assertRaises(ParseError):
            SweepConfig.from_mapping({"theorem": "macmahon", "a": "1", "b": "1", "c": "1", "timings": "maybe"})

    def test_grid_filters_inadmissible_tuples(self):
        kept, dropped = SweepConfig("rho", RHO_RANGES).grid()
        self.assertEqual(kept, [RHO_PARAMS])
        self.assertEqual(dropped, 1)


class TestCheckTuple(unittest.TestCase):

    def test_pass(self):
        record = check_tuple(("rho", RHO_PARAMS, CheckSettings()))
        self.assertEqual(record.status, PASS)
        self.assertEqual((record.formula, record.oracle), ("16", "16"))
        self.assertIsNotNone(record.wall_time)

    def test_cap_is_a_skip(self):
        record = check_tuple(("rho", RHO_PARAMS, CheckSettings(cap=2)))
        self.assertEqual(record.status, SKIPPED_CAP)
        self.assertIn("cap", record.detail)

    def test_wrong_formula_fails(self):
        with mock.patch.object(type(get_theorem("rho")), "formula", return_value=17):
            record = check_tuple(("rho", RHO_PARAMS, CheckSettings()))
        self.assertEqual(record.status, FAIL)
        self.assertEqual((record.formula, record.oracle), ("17", "16"))

    def test_library_error_fails_with_detail(self):
        with mock.patch.object(type(get_theorem("rho")), "formula", side_effect=NonIntegerResultError("5/2")):
            record = check_tuple(("rho", RHO_PARAMS, CheckSettings()))
        self.assertEqual(record.status, FAIL)
        self.assertEqual(record.detail, "NonIntegerResultError: 5/2")


class TestRunSweep(unittest.TestCase):

    def test_serial_sweep(self):
        summary = run_sweep(SweepConfig("rho", RHO_RANGES, jobs=1), progress=False)
        self.assertEqual((summary.passed, summary.failed, summary.skipped), (1, 0, 0))
        self.assertEqual(summary.inadmissible, 1)
        self.assertIsNone(summary.first_failure)
        self.assertEqual(str(summary), "1 checked: 1 passed, 0 failed, 0 skipped (cap), 1 outside the domain")

    def test_pool_keeps_grid_order(self):
        ranges = {"a": (1, 2), "b": (1, 2), "c": (1, 1)}
        serial = run_sweep(SweepConfig("macmahon", ranges, jobs=1), progress=False)
        _InlinePool.instances.clear()
        with mock.patch.object(sweep, "ProcessPoolExecutor", _InlinePool):
            pooled = run_sweep(SweepConfig("macmahon", ranges, jobs=3), progress=False)
        self.assertEqual(_InlinePool.instances[0].max_workers, 3)
        self.assertEqual([r.params for r in pooled.records], [r.params for r in serial.records])
        self.assertEqual(pooled.passed, 4)

    def test_workers_never_exceed_tasks(self):
        _InlinePool.instances.clear()
        ranges = {"a": (1, 1), "b": (1, 2), "c": (1, 1)}
        with mock.patch.object(sweep, "ProcessPoolExecutor", _InlinePool):
            run_sweep(SweepConfig("macmahon", ranges, jobs=8), progress=False)
        self.assertEqual(_InlinePool.instances[0].max_workers, 2)

    def test_default_jobs(self):
        with mock.patch.object(cfg, "SWEEP_JOBS", None):
            with mock.patch.object(sweep.psutil, "cpu_count", return_value=None):
                self.assertEqual(default_jobs(), 1)
            with mock.patch.object(sweep.psutil, "cpu_count", return_value=4):
                self.assertEqual(default_jobs(), 4)
        with mock.patch.object(cfg, "SWEEP_JOBS", 2):
            self.assertEqual(default_jobs(), 2)


class TestReport(unittest.TestCase):

    def test_json_fields(self):
        record = VerificationRecord("rho", RHO_PARAMS, PASS, "16", "16", wall_time=0.25)
        data = json.loads(record.to_json())
        self.assertEqual(set(data), {"theorem", "params", "status", "formula", "oracle"})
        self.assertEqual(json.loads(record.to_json(timings=True))["wall_time"], 0.25)

    def test_write_report(self):
        records = [
            VerificationRecord("rho", RHO_PARAMS, PASS, "16", "16"),
            VerificationRecord("rho", {**RHO_PARAMS, "n": 2}, FAIL, detail="boom"),
        ]
        summary = SweepSummary(records)
        self.assertIs(summary.first_failure, records[1])
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "nested" / "rho.jsonl"
            write_report(summary, path)
            lines = path.read_text(encoding="utf-8").splitlines()
        self.assertEqual(len(lines), 2)
        self.assertEqual(json.loads(lines[1])["detail"], "boom")
        self.assertEqual(json.loads(lines[0])["params"], RHO_PARAMS)


if __name__ == "__main__":
    unittest.main()
