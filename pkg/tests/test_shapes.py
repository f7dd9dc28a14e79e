import math
import os
import sys
import unittest

from hypothesis import given, settings
from hypothesis import strategies as st

# Add project root to sys.path so we can import tableau_forge
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from tableau_forge.core.errors import CellOutsideShapeError, InvalidParametersError, ParseError
from tableau_forge.core.shapes import (
    Cell,
    Partition,
    ShiftedSkewShape,
    SkewShape,
    StrictPartition,
    add,
    ascii_diagram,
    build_m,
    build_rho,
    build_v,
    conjugate,
    d_region,
    delta,
    hook_length,
    nn,
    parse_partition,
    partitions_of,
    shifted_hook_length,
    strict_partitions_of,
    subpartitions,
)
from tests.strategies import partition_strategy, skew_shape_strategy


class TestPartition(unittest.TestCase):

    def test_trailing_zeros_are_dropped(self):
        self.assertEqual(Partition((3, 1, 0, 0)).parts, (3, 1))
        self.assertEqual(Partition((0,)), Partition())

    def test_rejects_increasing_or_negative_parts(self):
        with self.assertRaises(InvalidParametersError):
            Partition((1, 2))
        with self.assertRaises(InvalidParametersError):
            Partition((2, -1))

    def test_strict_partition_rejects_repeats(self):
        with self.assertRaises(InvalidParametersError):
            StrictPartition((2, 2))

    def test_part_is_zero_past_length(self):
        lam = Partition((4, 2))
        self.assertEqual(lam.part(2), 2)
        self.assertEqual(lam.part(3), 0)
        self.assertEqual(lam.padded(4), (4, 2, 0, 0))

    def test_algebra(self):
        self.assertEqual(conjugate(Partition((4, 3, 1))), Partition((3, 2, 2, 1)))
        self.assertEqual(delta(4), Partition((3, 2, 1)))
        self.assertEqual(add(delta(3), Partition((1,))), Partition((3, 1)))
        self.assertEqual(nn(Partition((2, 1, 1))), 3)

    def test_staircase_decomposition(self):
        n, mu = StrictPartition((5, 3, 1)).staircase_decomposition()
        self.assertEqual(n, 3)
        self.assertEqual(mu, Partition((2, 1)))

    @given(partition_strategy())
    def test_conjugate_is_an_involution(self, lam):
        self.assertEqual(conjugate(conjugate(lam)), lam)
        self.assertEqual(conjugate(lam).size, lam.size)


class TestHooks(unittest.TestCase):

    def test_hook_length_formula_counts_431(self):
        lam = Partition((4, 3, 1))
        hooks = math.prod(hook_length(lam, c) for c in lam.cells())
        self.assertEqual(math.factorial(lam.size) // hooks, 70)

    def test_hook_outside_shape(self):
        with self.assertRaises(CellOutsideShapeError):
            hook_length(Partition((2,)), (2, 1))

    def test_shifted_hooks(self):
        lam = StrictPartition((4, 2, 1))
        hooks = math.prod(shifted_hook_length(lam, c) for c in lam.shifted_cells())
        self.assertEqual(hooks, 720)
        self.assertEqual(shifted_hook_length(lam, (1, 1)), 4)
        with self.assertRaises(CellOutsideShapeError):
            shifted_hook_length(lam, (2, 1))


class TestSkewShapes(unittest.TestCase):

    def test_inner_must_fit(self):
        with self.assertRaises(InvalidParametersError):
            SkewShape(Partition((2,)), Partition((1, 1)))

    def test_cells_and_size(self):
        shape = SkewShape(Partition((2, 2)), Partition((1,)))
        self.assertEqual(shape.cells(), [Cell(1, 2), Cell(2, 1), Cell(2, 2)])
        self.assertEqual(shape.size, 3)
        self.assertIn((2, 1), shape)
        self.assertNotIn((1, 1), shape)

    def test_shifted_row_intervals(self):
        shape = ShiftedSkewShape(StrictPartition((3, 1)), StrictPartition((1,)))
        self.assertEqual(shape.row_intervals(), ((2, 3), (2, 2)))
        self.assertEqual(shape.size, 3)

    def test_ascii_diagram(self):
        self.assertEqual(ascii_diagram(SkewShape(Partition((3, 2)), Partition((1,)))), ".##\n##")
        shifted = ShiftedSkewShape(StrictPartition((3, 1)), StrictPartition((1,)))
        self.assertEqual(ascii_diagram(shifted), ".##\n #")

    @given(skew_shape_strategy())
    def test_cells_match_size(self, shape):
        cells = shape.cells()
        self.assertEqual(len(cells), shape.size)
        self.assertTrue(all(c in shape for c in cells))


class TestFamilies(unittest.TestCase):

    def test_rho_shape(self):
        shape = build_rho(1, 1, 1, 1, 1)
        self.assertEqual(shape.outer, Partition((3, 3, 2)))
        self.assertEqual(shape.inner, Partition((2, 1)))

    def test_rho_needs_positive_a(self):
        with self.assertRaises(InvalidParametersError):
            build_rho(1, 0, 1, 1, 1)

    def test_v_shape(self):
        shape = build_v(1, 1, 0, 1)
        self.assertEqual(shape.outer, StrictPartition((2, 1)))
        self.assertEqual(shape.inner, StrictPartition((1,)))

    def test_m_shape_at_m_one_is_a_box_with_a_foot(self):
        shape = build_m(1, 1, 1, 0, 1, 1)
        self.assertEqual(shape.outer, Partition((2, 2, 1)))
        self.assertEqual(shape.inner, Partition())

    def test_m_rejects_zero_m(self):
        with self.assertRaises(InvalidParametersError):
            build_m(1, 1, 1, 1, 1, 0)

    def test_d_region(self):
        self.assertEqual(d_region(2), (Cell(1, 3), Cell(1, 4), Cell(2, 4)))


class TestEnumeration(unittest.TestCase):

    def test_partitions_of(self):
        self.assertEqual(len(list(partitions_of(4))), 5)
        self.assertEqual(list(partitions_of(0)), [Partition()])
        self.assertEqual(next(partitions_of(3)), Partition((3,)))

    def test_strict_partitions_of(self):
        self.assertEqual(
            [p.parts for p in strict_partitions_of(6)],
            [(6,), (5, 1), (4, 2), (3, 2, 1)],
        )

    def test_subpartitions(self):
        subs = list(subpartitions(Partition((2, 1))))
        self.assertEqual(subs[0], Partition())
        self.assertEqual(len(subs), 5)

    @settings(max_examples=30)
    @given(partition_strategy(max_n=6))
    def test_subpartitions_are_contained_and_distinct(self, lam):
        subs = list(subpartitions(lam))
        self.assertEqual(len(subs), len(set(subs)))
        self.assertTrue(all(lam.contains(mu) for mu in subs))

    @given(st.integers(min_value=0, max_value=8))
    def test_partitions_have_the_right_size(self, size):
        self.assertTrue(all(p.size == size for p in partitions_of(size)))


class TestParsePartition(unittest.TestCase):

    def test_parse(self):
        self.assertEqual(parse_partition(" 3,1 "), Partition((3, 1)))
        self.assertEqual(parse_partition(""), Partition())

    def test_parse_rejects_garbage(self):
        with self.assertRaises(ParseError):
            parse_partition("3,x")

    def test_parse_keeps_the_validation_message(self):
        with self.assertRaises(InvalidParametersError) as ctx:
            parse_partition("1,2")
        self.assertNotIsInstance(ctx.exception, ParseError)
        self.assertIn("weakly decreasing", str(ctx.exception))


if __name__ == "__main__":
    unittest.main()
