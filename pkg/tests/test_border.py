"""
Unit tests for border module
"""

import unittest
from unittest.mock import patch

from ringbasis.border import (
    border_basis_of,
    border_index,
    border_nf,
    certify_border_basis,
    is_border_basis,
    validate_order_ideal,
    validate_prebasis,
)
from ringbasis.coeffring import integers
from ringbasis.errors import (
    BadSupport,
    CountMismatch,
    EmptySet,
    InfiniteQuotient,
    MissingBorderTerm,
    NotCertified,
    NotDivisorClosed,
    NotFree,
    OrderIdealMismatch,
)
from ringbasis.groebner import normal_form, short_reduced_basis
from ringbasis.poly import LEX
from tests.helpers import poly, polys


class TestOrderIdeal(unittest.TestCase):
    """Test cases for validate_order_ideal"""

    def test_border(self):
        """Test the border of {1, x}"""
        O = validate_order_ideal([(0, 0), (1, 0)], order=LEX)
        self.assertEqual(O.monomials, ((0, 0), (1, 0)))
        self.assertEqual(set(O.border), {(0, 1), (1, 1), (2, 0)})

    def test_not_divisor_closed(self):
        """Test that {1, xy} reports xy and its missing divisor x"""
        with self.assertRaises(NotDivisorClosed) as ctx:
            validate_order_ideal([(0, 0), (1, 1)], order=LEX)
        self.assertEqual(ctx.exception.monomial, (1, 1))
        self.assertEqual(ctx.exception.missing, (1, 0))

    def test_empty(self):
        """Test that the empty set is refused"""
        with self.assertRaises(EmptySet):
            validate_order_ideal([])

    def test_border_index(self):
        """Test border indices around {1, x}"""
        O = validate_order_ideal([(0, 0), (1, 0)], order=LEX)
        self.assertEqual(border_index((1, 0), O), 0)
        self.assertEqual(border_index((0, 1), O), 1)
        self.assertEqual(border_index((2, 1), O), 2)
        self.assertEqual(border_index((0, 3), O), 3)


class TestPrebasis(unittest.TestCase):
    """Test cases for validate_prebasis"""

    def setUp(self):
        """Set up test fixtures"""
        self.z = integers()
        self.names = ["x", "y"]
        self.O = validate_order_ideal([(0, 0), (1, 0)], order=LEX)

    def test_valid(self):
        """Test a valid prebasis is aligned with the border"""
        B = validate_prebasis(self.O, polys(self.z, self.names, "x^2 - 1", "y - 1", "x*y - x"), LEX)
        self.assertEqual(B.element_for((0, 1)), poly(self.z, self.names, "y - 1"))
        self.assertFalse(B.certified)

    def test_count_mismatch(self):
        """Test the wrong number of polynomials"""
        with self.assertRaises(CountMismatch):
            validate_prebasis(self.O, polys(self.z, self.names, "x^2 - 1", "y - 1"), LEX)

    def test_bad_support(self):
        """Test a tail term outside the order ideal"""
        with self.assertRaises(BadSupport):
            validate_prebasis(self.O, polys(self.z, self.names, "x^2 - y", "y - 1", "x*y - x"), LEX)

    def test_missing_border_term(self):
        """Test a border monomial without a polynomial"""
        with self.assertRaises(MissingBorderTerm):
            validate_prebasis(self.O, polys(self.z, self.names, "x^2 - 1", "y - 1", "y - x"), LEX)
        with self.assertRaises(MissingBorderTerm):
            validate_prebasis(self.O, polys(self.z, self.names, "x^2 - 1", "2*y - 1", "x*y - x"), LEX)


class TestBorderBasis(unittest.TestCase):
    """Test cases for border bases of free quotients"""

    def setUp(self):
        """Set up test fixtures"""
        self.z = integers()
        self.names = ["x", "y"]
        self.gens = polys(self.z, self.names, "x^2 - 1", "y - 1")
        self.G = short_reduced_basis(self.gens, LEX)
        self.O = validate_order_ideal([(0, 0), (1, 0)], order=LEX)

    def test_border_basis_of(self):
        """Test the border basis of <x^2 - 1, y - 1> over {1, x}"""
        B = border_basis_of(self.G, self.O)
        self.assertTrue(B.certified)
        self.assertEqual(set(B.elements), set(polys(self.z, self.names, "x^2 - 1", "y - 1", "x*y - x")))
        self.assertTrue(is_border_basis(B, self.gens))

    def test_border_normal_form(self):
        """Test border division of x^2*y"""
        B = border_basis_of(self.G, self.O)
        self.assertEqual(border_nf(poly(self.z, self.names, "x^2*y"), B), poly(self.z, self.names, "1"))
        f = poly(self.z, self.names, "3*x^3*y^2 - x*y + 5")
        self.assertEqual(border_nf(f, B), normal_form(f, self.G).remainder)

    def test_largest_term_rewritten_first(self):
        """Test that border division rewrites outside terms in descending order"""
        B = border_basis_of(self.G, self.O)
        f = poly(self.z, self.names, "3*x^3*y^2 - x*y + x^2 + 5*y^4")
        with patch("ringbasis.border.border_index", wraps=border_index) as spy:
            result = border_nf(f, B)
        rewritten = [call.args[0] for call in spy.call_args_list]
        self.assertEqual(rewritten[0], (3, 2))
        self.assertTrue(all(LEX.key(a) > LEX.key(b) for a, b in zip(rewritten, rewritten[1:])))
        self.assertEqual(result, normal_form(f, self.G).remainder)

    def test_uncertified_prebasis_refused(self):
        """Test that border division needs a certificate"""
        B = validate_prebasis(self.O, polys(self.z, self.names, "x^2 - 1", "y - 1", "x*y - x"), LEX)
        with self.assertRaises(NotCertified):
            border_nf(poly(self.z, self.names, "y"), B)
        certified = certify_border_basis(B, self.gens)
        self.assertEqual(border_nf(poly(self.z, self.names, "y"), certified), poly(self.z, self.names, "1"))

    def test_wrong_prebasis_not_certified(self):
        """Test a prebasis of another ideal"""
        B = validate_prebasis(self.O, polys(self.z, self.names, "x^2 - 1", "y + 1", "x*y + x"), LEX)
        self.assertFalse(is_border_basis(B, self.gens))
        with self.assertRaises(NotCertified):
            certify_border_basis(B, self.gens)

    def test_order_ideal_mismatch(self):
        """Test an order ideal that is not the staircase"""
        O = validate_order_ideal([(0, 0), (0, 1)], order=LEX)
        with self.assertRaises(OrderIdealMismatch):
            border_basis_of(self.G, O)

    def test_infinite_quotient(self):
        """Test that infinite rank is refused"""
        G = short_reduced_basis(polys(self.z, self.names, "x^2"), LEX)
        with self.assertRaises(InfiniteQuotient):
            border_basis_of(G, self.O)

    def test_not_free(self):
        """Test that torsion quotients are refused"""
        G = short_reduced_basis(polys(self.z, self.names, "2*x", "y"), LEX)
        with self.assertRaises(NotFree):
            border_basis_of(G, validate_order_ideal([(0, 0)], order=LEX))


if __name__ == '__main__':
    unittest.main()
