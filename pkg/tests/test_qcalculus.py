import os
import sys
import unittest
from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

# Add project root to sys.path so we can import tableau_forge
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from tableau_forge.core.errors import (
    DivergenceSuspectedError,
    InvalidParametersError,
    PoleError,
)
from tableau_forge.core.qcalculus import (
    QPoint,
    SqrtPiRational,
    gamma_q,
    gamma_ratio,
    partition_lattice_sum,
    q_change_of_variables,
    q_integral,
    q_integral_monomial,
    q_integral_simplex,
    q_selberg_lhs,
    q_selberg_rhs,
    q_selberg_rhs_gamma,
    rho_integral_identity,
    selberg_gamma_forms,
    vandermonde_squared,
    warnaar_rhs,
)
from tableau_forge.core.shapes import Partition

HALF = Fraction(1, 2)


class TestOneVariable(unittest.TestCase):

    def test_qpoint_validation(self):
        with self.assertRaises(InvalidParametersError):
            QPoint(q=Fraction(1))
        with self.assertRaises(InvalidParametersError):
            QPoint(depth=0)

    def test_integral_of_one(self):
        result = q_integral(lambda x: 1, 0, 1)
        self.assertTrue(result.within(Fraction(1)))
        self.assertGreater(result.tail_bound, 0)
        self.assertEqual(result.value + result.tail_bound, 1)

    def test_monomial(self):
        self.assertEqual(q_integral_monomial(1, 1, HALF), Fraction(2, 3))
        self.assertTrue(q_integral(lambda x: x, 0, 1).within(Fraction(2, 3)))

    def test_growing_terms_are_flagged(self):
        with self.assertRaises(DivergenceSuspectedError):
            q_integral(lambda x: 1 / x ** 2, 0, 1)

    @given(st.integers(min_value=0, max_value=4), st.integers(min_value=1, max_value=4), st.integers(min_value=0, max_value=3))
    def test_change_of_variables(self, j, m, k):
        lhs, rhs = q_change_of_variables(j, m, HALF, k)
        self.assertEqual(lhs, rhs)

    def test_gamma_q(self):
        self.assertEqual(gamma_q(1, HALF), 1)
        self.assertEqual(gamma_q(3, HALF), Fraction(3, 2))
        with self.assertRaises(InvalidParametersError):
            gamma_q(0, HALF)


class TestLatticeSums(unittest.TestCase):

    def test_vandermonde_squared(self):
        self.assertEqual(vandermonde_squared(Fraction(1), Fraction(2), Fraction(4)), 36)

    def test_partition_lattice_one_variable(self):
        self.assertTrue(partition_lattice_sum(lambda x: 1, 1).within(Fraction(2)))
        self.assertTrue(partition_lattice_sum(lambda x: x, 1).within(Fraction(4, 3)))

    def test_simplex_one_variable(self):
        result = q_integral_simplex(lambda x: x, 1)
        self.assertTrue(result.within(Fraction(2, 3)))
        self.assertEqual(result.value + result.tail_bound, Fraction(2, 3))

    def test_simplex_is_a_scaled_lattice_sum_off_the_diagonal(self):
        pt = QPoint(HALF, 12)
        simplex = q_integral_simplex(vandermonde_squared, 2, pt)
        lattice = partition_lattice_sum(vandermonde_squared, 2, pt)
        self.assertGreater(lattice.value, 0)
        self.assertEqual(simplex.value, (1 - HALF) ** 2 * lattice.value)


class TestQSelberg(unittest.TestCase):

    def test_single_variable_beta_one(self):
        q = HALF
        self.assertEqual(q_selberg_rhs(1, 1, 1, q ** 2, q, q), q - q ** 2)
        self.assertEqual(q_selberg_lhs(1, 1, 1, 2, 1).value, q - q ** 2)

    def test_finite_lattice_is_exact(self):
        q = HALF
        lhs = q_selberg_lhs(1, 2, 1, 2, 0)
        self.assertEqual(lhs.tail_bound, 0)
        self.assertEqual(lhs.value, Fraction(-1, 2))
        self.assertEqual(q_selberg_rhs(1, 2, 1, q ** 2, 1, q), -(1 - q) ** 2 / q)

    def test_lower_limit_zero(self):
        self.assertEqual(q_selberg_rhs(1, 2, 1, 0, 1, HALF), (1 - HALF) / (1 - HALF ** 2))
        self.assertEqual(q_selberg_rhs(2, 1, 1, 0, 1, HALF), Fraction(8, 63))
        self.assertTrue(q_selberg_lhs(2, 1, 1, None, 0).within(Fraction(8, 63)))

    def test_gamma_form_matches_product(self):
        for n, alpha, beta in [(1, 2, 3), (2, 2, 1), (2, 1, 2)]:
            with self.subTest(n=n, alpha=alpha, beta=beta):
                a, b = Fraction(1, 8), HALF
                self.assertEqual(
                    q_selberg_rhs_gamma(n, alpha, beta, a, b, HALF),
                    q_selberg_rhs(n, alpha, beta, a, b, HALF),
                )

    def test_pole_and_bad_limits(self):
        with self.assertRaises(PoleError):
            q_selberg_rhs(1, 1, 1, HALF, HALF, HALF)
        with self.assertRaises(InvalidParametersError):
            q_selberg_lhs(1, 1, 1, 1, 2)
        with self.assertRaises(InvalidParametersError):
            q_selberg_lhs(0, 1, 1, 2, 1)


class TestGammaValues(unittest.TestCase):

    def test_gamma_ratio(self):
        self.assertEqual(gamma_ratio([Fraction(4, 3)], [Fraction(1, 3)]), SqrtPiRational(Fraction(1, 3)))
        self.assertEqual(gamma_ratio([Fraction(5, 2)], [Fraction(1, 2)]), SqrtPiRational(Fraction(3, 4)))
        self.assertEqual(gamma_ratio([Fraction(1, 2)], []), SqrtPiRational(Fraction(1), 1))

    def test_unpaired_class_is_rejected(self):
        with self.assertRaises(InvalidParametersError):
            gamma_ratio([Fraction(1, 3)], [])
        with self.assertRaises(InvalidParametersError):
            gamma_ratio([Fraction(0)], [])

    def test_text_form(self):
        self.assertEqual(str(SqrtPiRational(Fraction(3, 4), 1)), "3/4 * sqrt(pi)^1")
        self.assertEqual(str(SqrtPiRational(Fraction(3, 4))), "3/4")

    def test_forms_agree(self):
        self.assertEqual(selberg_gamma_forms(1, 0, 0, 1), (SqrtPiRational(Fraction(1)),) * 2)
        self.assertEqual(selberg_gamma_forms(1, 1, 0, 1), (SqrtPiRational(Fraction(1, 2)),) * 2)
        with self.assertRaises(InvalidParametersError):
            selberg_gamma_forms(0, 0, 0, 1)


class TestRhoIntegrals(unittest.TestCase):

    def test_warnaar_values(self):
        self.assertEqual(warnaar_rhs(Partition(), 2, 3, 1), Fraction(1, 12))
        self.assertEqual(warnaar_rhs(Partition((1,)), 2, 3, 1), Fraction(1, 30))
        with self.assertRaises(InvalidParametersError):
            warnaar_rhs(Partition((1, 1)), 2, 3, 1)

    def test_ledger(self):
        ledger = rho_integral_identity(1, 1, 1, 1, 1)
        self.assertEqual(ledger.addends, (0, Fraction(1, 3), Fraction(1, 6), Fraction(1, 30)))
        self.assertEqual(ledger.total, Fraction(8, 15))
        self.assertEqual(ledger.closed_form, ledger.total)

        ledger = rho_integral_identity(2, 1, 1, 1, 1)
        self.assertEqual(
            ledger.addends,
            (Fraction(1, 1800), Fraction(1, 280), Fraction(1, 1050), Fraction(1, 12600)),
        )
        self.assertEqual(ledger.total, Fraction(13, 2520))

    def test_no_staircase_rows(self):
        ledger = rho_integral_identity(0, 2, 1, 1, 3)
        self.assertEqual(ledger.addends[:3], (0, 0, 0))
        self.assertEqual(ledger.total, 6)

    def test_domain(self):
        with self.assertRaises(InvalidParametersError):
            rho_integral_identity(1, 0, 1, 1, 1)


if __name__ == "__main__":
    unittest.main()
