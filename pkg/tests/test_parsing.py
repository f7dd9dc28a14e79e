import logging
import os
import sys
import tempfile
import unittest
from pathlib import Path
from unittest import mock

# Add project root to sys.path so we can import tableau_forge
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from tableau_forge import config as cfg
from tableau_forge.core.errors import InvalidParametersError, ParseError
from tableau_forge.core.parsing import (
    family_shape,
    parse_config,
    parse_int_list,
    parse_params,
    parse_range,
    parse_shape,
)
from tableau_forge.core.shapes import Partition, ShiftedSkewShape, StrictPartition
from tableau_forge.utils import logger as log_module


class TestShapeText(unittest.TestCase):

    def test_skew(self):
        shape = parse_shape("4,3,1/2,1")
        self.assertEqual(shape.outer, Partition((4, 3, 1)))
        self.assertEqual(shape.inner, Partition((2, 1)))
        self.assertEqual(parse_shape("3,2").inner, Partition())
        self.assertEqual(parse_shape("1/").size, 1)

    def test_shifted(self):
        shape = parse_shape("5,3,1/2", shifted=True)
        self.assertIsInstance(shape, ShiftedSkewShape)
        self.assertEqual(shape.outer, StrictPartition((5, 3, 1)))

    def test_bad_shapes_are_parse_errors(self):
        for text, shifted in [("1,2", False), ("2/3", False), ("2,2", True), ("a/b", False)]:
            with self.subTest(text=text):
                with self.assertRaises(ParseError):
                    parse_shape(text, shifted=shifted)

    def test_bad_shape_names_the_reason(self):
        with self.assertRaises(ParseError) as ctx:
            parse_shape("1,2")
        self.assertIn("Bad shape", str(ctx.exception))
        self.assertIn("weakly decreasing", str(ctx.exception))


class TestParams(unittest.TestCase):

    def test_int_list(self):
        self.assertEqual(parse_int_list(" 1, 2 ,3"), (1, 2, 3))
        self.assertEqual(parse_int_list(""), ())
        with self.assertRaises(ParseError):
            parse_int_list("1,,2")

    def test_params(self):
        self.assertEqual(parse_params("1,2", ("a", "b")), {"a": 1, "b": 2})
        with self.assertRaises(ParseError):
            parse_params("1", ("a", "b"))

    def test_family(self):
        shape, params = family_shape("RHO", "1,1,1,1,1")
        self.assertEqual(shape.size, 5)
        self.assertEqual(params["d"], 1)
        with self.assertRaises(ParseError):
            family_shape("sigma", "1")
        with self.assertRaises(InvalidParametersError):
            family_shape("v", "1,1,1,0")

    def test_range(self):
        self.assertEqual(parse_range("2..5"), (2, 5))
        self.assertEqual(parse_range(" 3 "), (3, 3))
        with self.assertRaises(ParseError):
            parse_range("5..2")
        with self.assertRaises(ParseError):
            parse_range("1..x")


class TestConfigFile(unittest.TestCase):

    def _write(self, text: str) -> Path:
        handle = tempfile.NamedTemporaryFile("w", suffix=".conf", delete=False, encoding="utf-8")
        with handle:
            handle.write(text)
        self.addCleanup(os.unlink, handle.name)
        return Path(handle.name)

    def test_reads_entries_and_comments(self):
        path = self._write("# sweep\ntheorem = rho   # the ρ family\nn = 0..2\n\ntimings=true\n")
        self.assertEqual(parse_config(path), {"theorem": "rho", "n": "0..2", "timings": "true"})

    def test_rejects_malformed_lines(self):
        with self.assertRaises(ParseError):
            parse_config(self._write("theorem rho\n"))
        with self.assertRaises(ParseError):
            parse_config(self._write("n = 1\nn = 2\n"))

    def test_missing_file(self):
        with self.assertRaises(ParseError):
            parse_config("/nonexistent/sweep.conf")


class TestConfigModule(unittest.TestCase):

    def test_env_int(self):
        with mock.patch.dict(os.environ, {"TABLEAU_FORGE_TEST": "7"}):
            self.assertEqual(cfg._env_int("TABLEAU_FORGE_TEST", 1), 7)
        with mock.patch.dict(os.environ, {"TABLEAU_FORGE_TEST": " "}):
            self.assertIsNone(cfg._env_int("TABLEAU_FORGE_TEST", None))
        for raw in ("x", "0"):
            with mock.patch.dict(os.environ, {"TABLEAU_FORGE_TEST": raw}):
                with self.assertRaises(InvalidParametersError):
                    cfg._env_int("TABLEAU_FORGE_TEST", 1)


class TestLogger(unittest.TestCase):

    def setUp(self):
        log_module.get_logger("tableau_forge.test")
        self.handler = log_module._console_handler
        self.addCleanup(self.handler.setLevel, self.handler.level)

    def test_console_handler_is_a_stream_handler(self):
        self.assertIsInstance(self.handler, logging.StreamHandler)
        self.assertIn(self.handler, logging.getLogger().handlers)

    def test_set_console_level(self):
        log_module.set_console_level(logging.DEBUG)
        self.assertEqual(self.handler.level, logging.DEBUG)
        log_module.set_console_level("WARNING")
        self.assertEqual(self.handler.level, logging.WARNING)

    def test_configures_once(self):
        before = len(logging.getLogger().handlers)
        log_module.get_logger("a")
        log_module.get_logger("b")
        self.assertEqual(len(logging.getLogger().handlers), before)


if __name__ == "__main__":
    unittest.main()
