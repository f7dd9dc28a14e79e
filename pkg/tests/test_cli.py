import io
import json
import os
import sys
import tempfile
import unittest
from contextlib import redirect_stderr, redirect_stdout
from pathlib import Path
from unittest import mock

# Add project root to sys.path so we can import tableau_forge
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from tableau_forge import app
from tableau_forge.theorems import get_theorem
from tests.test_theorems import NUMBERED_IDS, SAMPLES

RHO_RANGES = ["--range", "n=1", "--range", "a=0..1", "--range", "b=1", "--range", "c=1", "--range", "d=1"]


def run(*argv):
    """(exit code, stdout, stderr) of one command line."""
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = app.main(list(argv))
    return code, out.getvalue(), err.getvalue()


class TestCount(unittest.TestCase):

    def test_straight_shape_all_methods(self):
        self.assertEqual(run("count", "--skew", "4,3,1", "--method", "oracle,naruse,formula")[:2], (0, "70\n"))

    def test_families(self):
        self.assertEqual(run("count", "--family", "rho", "--params", "1,1,1,1,1", "--method", "oracle,formula")[1], "16\n")
        self.assertEqual(run("count", "--family", "v", "--params", "2,1,1,1", "--method", "formula,oracle")[1], "12\n")
        self.assertEqual(run("count", "--family", "m", "--params", "1,1,0,0,0,2", "--method", "formula,oracle")[1], "2\n")

    def test_shifted_hook_product(self):
        self.assertEqual(run("count", "--shifted", "4,2,1", "--method", "formula")[1], "7\n")

    def test_no_closed_form_is_a_usage_error(self):
        code, out, err = run("count", "--skew", "2,2/1", "--method", "formula")
        self.assertEqual(code, 2)
        self.assertEqual(out, "")
        self.assertTrue(err.startswith("error: No closed form"))

    def test_unknown_method(self):
        self.assertEqual(run("count", "--skew", "2", "--method", "magic")[0], 2)

    def test_engine_disagreement(self):
        with mock.patch.object(app, "naruse_count", return_value=3):
            code, _, err = run("count", "--skew", "2,2/1", "--method", "oracle,naruse")
        self.assertEqual(code, 4)
        self.assertIn("naruse gives 3", err)


class TestGf(unittest.TestCase):

    def test_truncated_series(self):
        self.assertEqual(run("gf", "--skew", "2,2/1", "--trunc", "2")[1], "q + 2 q^2 (+O(q^3))\n")

    def test_family_m_engines_agree(self):
        code, out, _ = run("gf", "--family", "m", "--params", "1,1,0,0,0,2", "--trunc", "4", "--engine", "oracle,formula")
        self.assertEqual(code, 0)
        self.assertEqual(out, "q + 2 q^2 + 3 q^3 + 5 q^4 (+O(q^5))\n")

    def test_bounded_entries(self):
        code, out, _ = run("gf", "--family", "m", "--params", "1,1,0,1,0,1", "--bounded", "1", "--engine", "oracle,formula")
        self.assertEqual((code, out), (0, "q + q^2\n"))

    def test_fixed_diagonal(self):
        code, out, _ = run("gf", "--shifted", "2", "--kind", "rpp", "--fixed-diag", "1", "--trunc", "5", "--engine", "oracle,formula")
        self.assertEqual((code, out), (0, "q^2 + q^3 + q^4 + q^5 (+O(q^6))\n"))

    def test_formula_restrictions(self):
        self.assertEqual(run("gf", "--skew", "2,1", "--kind", "rst", "--engine", "formula")[0], 2)
        self.assertEqual(run("gf", "--skew", "2,1", "--trace")[0], 2)
        self.assertEqual(run("gf", "--skew", "2,1", "--kind", "plane")[0], 2)

    def test_entry_cap_is_oracle_only(self):
        code, _, err = run("gf", "--family", "m", "--params", "1,1,0,0,0,2", "--max-entry", "3", "--engine", "oracle,formula")
        self.assertEqual(code, 2)
        self.assertIn("--max-entry", err)
        code, out, _ = run("gf", "--skew", "2,2/1", "--trunc", "2", "--max-entry", "2")
        self.assertEqual((code, out), (0, "q + 2 q^2 (+O(q^3))\n"))


class TestExcitedShapeTheorems(unittest.TestCase):

    def test_excited(self):
        self.assertEqual(run("excited", "--skew", "2,2/1")[1], "2\n")
        self.assertEqual(run("excited", "--skew", "2,2/1", "--list")[1], "(1,1)\n(2,2)\n")

    def test_excited_cap(self):
        self.assertEqual(run("excited", "--skew", "2,2/1", "--cap", "1")[0], 3)

    def test_shape(self):
        self.assertEqual(run("shape", "--skew", "3,2/1")[1], ".##\n##\n4 cells\n")
        self.assertEqual(run("shape", "--shifted", "3,1/1")[1], ".##\n #\n3 cells\n")

    def test_bad_shape(self):
        code, _, err = run("shape", "--skew", "1,2")
        self.assertEqual(code, 2)
        self.assertIn("Bad shape", err)

    def test_theorems(self):
        lines = run("theorems")[1].splitlines()
        self.assertEqual(len(lines), 25)
        self.assertTrue(any(line.startswith("rho ") for line in lines))


class TestVerify(unittest.TestCase):

    def setUp(self):
        tmp = tempfile.TemporaryDirectory()
        self.addCleanup(tmp.cleanup)
        self.tmp = Path(tmp.name)

    def test_passing_sweep_writes_report(self):
        report = self.tmp / "rho.jsonl"
        code, out, _ = run("verify", "rho", *RHO_RANGES, "--jobs", "1", "--no-progress", "--output", str(report))
        self.assertEqual(code, 0)
        self.assertIn("1 passed", out)
        records = [json.loads(line) for line in report.read_text(encoding="utf-8").splitlines()]
        self.assertEqual(len(records), 1)
        self.assertEqual(records[0]["status"], "pass")
        self.assertNotIn("wall_time", records[0])

    def test_tuples_outside_the_shape_are_filtered(self):
        report = self.tmp / "rho.jsonl"
        ranges = ["--range", "n=0..1", "--range", "a=1", "--range", "b=0..1", "--range", "c=1", "--range", "d=0..1"]
        code, out, err = run("verify", "rho", *ranges, "--jobs", "1", "--no-progress", "--output", str(report))
        self.assertEqual(code, 0, err)
        self.assertIn("5 checked: 5 passed, 0 failed", out)
        self.assertIn("3 outside the domain", out)

    def test_timings(self):
        report = self.tmp / "rho.jsonl"
        run("verify", "rho", *RHO_RANGES, "--jobs", "1", "--no-progress", "--timings", "--output", str(report))
        self.assertIn("wall_time", json.loads(report.read_text(encoding="utf-8")))

    def test_failure_exit_code(self):
        report = self.tmp / "rho.jsonl"
        with mock.patch.object(type(get_theorem("rho")), "formula", return_value=17):
            code, _, err = run("verify", "rho", *RHO_RANGES, "--jobs", "1", "--no-progress", "--output", str(report))
        self.assertEqual(code, 1)
        self.assertIn("first failure at", err)
        self.assertIn("formula 17 != oracle 16", err)

    def test_config_file(self):
        report = self.tmp / "box.jsonl"
        conf = self.tmp / "box.conf"
        conf.write_text(f"theorem = macmahon\na = 1..2\nb = 1\nc = 0..1\njobs = 1\noutput = {report}\n", encoding="utf-8")
        code, out, _ = run("verify", "--config", str(conf), "--no-progress")
        self.assertEqual(code, 0)
        self.assertIn("4 passed", out)
        self.assertEqual(len(report.read_text(encoding="utf-8").splitlines()), 4)

    def test_numbered_ids(self):
        for alias, identifier in NUMBERED_IDS.items():
            with self.subTest(alias=alias):
                report = self.tmp / f"{identifier}.jsonl"
                ranges = [f"--range={name}={value}" for name, value in SAMPLES[identifier].items()]
                code, out, err = run("verify", alias, *ranges, "--trunc", "6", "--jobs", "1", "--no-progress", "--output", str(report))
                self.assertEqual(code, 0, err)
                self.assertIn("1 passed", out)
                self.assertEqual(json.loads(report.read_text(encoding="utf-8"))["theorem"], identifier)

    def test_bad_range_option(self):
        self.assertEqual(run("verify", "rho", "--range", "n1..2")[0], 2)


class TestArgparse(unittest.TestCase):

    def test_missing_command_or_shape(self):
        for argv in ([], ["count"], ["count", "--skew", "2", "--shifted", "2"]):
            with self.subTest(argv=argv):
                with redirect_stderr(io.StringIO()), self.assertRaises(SystemExit) as ctx:
                    app.main(argv)
                self.assertEqual(ctx.exception.code, 2)


if __name__ == "__main__":
    unittest.main()
