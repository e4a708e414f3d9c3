"""
Unit tests for poly module
"""

import unittest

from sympy.polys.orderings import ProductOrder, grevlex, lex

from ringbasis.coeffring import integers, poly_over_field, prime_field, rationals
from ringbasis.errors import DimensionMismatch, RingMismatch, ZeroPolynomial
from ringbasis.poly import (
    GREVLEX,
    LEX,
    MonomialOrder,
    Ordering,
    OrderKind,
    Polynomial,
    PolyOp,
    divide,
    block_order,
    from_joint,
    joint_leading_monomial,
    monomial_compare,
    monomial_lcm,
    poly_arith,
    pure_power_index,
    to_joint,
)
from tests.helpers import poly


class TestMonomialOrder(unittest.TestCase):
    """Test cases for MonomialOrder"""

    def test_lex(self):
        """Test lex comparisons"""
        self.assertEqual(LEX.compare((1, 0), (0, 5)), Ordering.GREATER)
        self.assertEqual(LEX.compare((0, 1), (0, 1)), Ordering.EQUAL)

    def test_grevlex(self):
        """Test grevlex comparisons"""
        self.assertEqual(GREVLEX.compare((1, 1, 0), (1, 0, 1)), Ordering.GREATER)
        self.assertEqual(GREVLEX.compare((0, 0, 3), (1, 1, 0)), Ordering.GREATER)
        self.assertEqual(GREVLEX.compare((0, 2, 0), (1, 0, 1)), Ordering.GREATER)

    def test_keys_follow_sympy_orderings(self):
        """Test order keys against sympy lex, grevlex and product orders"""
        block = MonomialOrder.block(LEX, OrderKind.GREVLEX, 1)
        product = ProductOrder((lex, lambda m: m[:1]), (grevlex, lambda m: m[1:]))
        for m in [(0, 0, 0), (2, 1, 0), (0, 3, 1), (1, 0, 4)]:
            self.assertEqual(LEX.key(m), lex(m))
            self.assertEqual(GREVLEX.key(m), grevlex(m))
            self.assertEqual(block.key(m), product(m))
        permuted = MonomialOrder.from_name("grevlex", precedence=(2, 0, 1))
        self.assertEqual(permuted.key((1, 2, 3)), grevlex((3, 1, 2)))

    def test_precedence(self):
        """Test a permuted variable precedence"""
        order = MonomialOrder.from_name("lex", precedence=(1, 0))
        self.assertEqual(order.compare((0, 1), (5, 0)), Ordering.GREATER)

    def test_block(self):
        """Test that a block order compares x exponents first"""
        order = MonomialOrder.block(LEX, OrderKind.GREVLEX, 1)
        self.assertEqual(monomial_compare(order, (1, 0, 0), (0, 5, 5)), Ordering.GREATER)
        self.assertEqual(monomial_compare(order, (1, 0, 2), (1, 1, 0)), Ordering.GREATER)
        self.assertEqual(monomial_compare(order, (1, 1, 1), (1, 0, 2)), Ordering.GREATER)
        self.assertEqual(monomial_compare(order, (2, 0, 1), (2, 0, 1)), Ordering.EQUAL)

    def test_block_order_of_ring(self):
        """Test the block order built for a coefficient ring"""
        ring = poly_over_field(rationals(), ["a", "b"], "grevlex")
        order = block_order(LEX, ring, 2)
        self.assertEqual(order.kind, OrderKind.BLOCK)
        self.assertEqual(order.split, 2)
        self.assertEqual(order.theta_kind, OrderKind.GREVLEX)
        self.assertEqual(monomial_compare(order, (0, 1, 0, 0), (0, 0, 3, 3)), Ordering.GREATER)

    def test_unknown_name(self):
        """Test that unknown order names are refused"""
        with self.assertRaises(ValueError):
            MonomialOrder.from_name("foo")

    def test_length_mismatch(self):
        """Test comparing monomials of different lengths"""
        with self.assertRaises(DimensionMismatch):
            LEX.compare((1, 0), (1,))


class TestPolynomial(unittest.TestCase):
    """Test cases for Polynomial"""

    def setUp(self):
        """Set up test fixtures"""
        self.z = integers()
        self.names = ["x1", "x2"]

    def test_zero_coefficients_dropped(self):
        """Test that construction drops zero coefficients"""
        f = Polynomial(self.z, 2, {(1, 0): 0, (0, 1): 3})
        self.assertEqual(len(f), 1)
        self.assertTrue(Polynomial(self.z, 2, {}).is_zero())

    def test_arithmetic(self):
        """Test ring arithmetic against parsed results"""
        f = poly(self.z, self.names, "x1 + 1")
        g = poly(self.z, self.names, "x1 - 1")
        self.assertEqual(f * g, poly(self.z, self.names, "x1^2 - 1"))
        self.assertEqual(f - f, Polynomial.zero(self.z, 2))
        self.assertEqual(2 * f, poly(self.z, self.names, "2*x1 + 2"))
        self.assertEqual(1 - f, poly(self.z, self.names, "-x1"))
        self.assertEqual(f ** 2, poly(self.z, self.names, "x1^2 + 2*x1 + 1"))

    def test_poly_arith(self):
        """Test the operation dispatcher"""
        f = poly(self.z, self.names, "x1")
        g = poly(self.z, self.names, "x2")
        self.assertEqual(poly_arith(PolyOp.ADD, f, g), f + g)
        self.assertEqual(poly_arith(PolyOp.SCALE, f, 3), poly(self.z, self.names, "3*x1"))
        with self.assertRaises(RingMismatch):
            poly_arith(PolyOp.MUL, f, poly(rationals(), self.names, "x1"))

    def test_prime_field_arithmetic(self):
        """Test coefficient reduction in GF(5)"""
        gf5 = prime_field(5)
        f = poly(gf5, self.names, "3*x1")
        self.assertEqual(f + f, poly(gf5, self.names, "x1"))
        self.assertTrue((f * 5).is_zero())

    def test_leading_data(self):
        """Test leading monomial and coefficient"""
        f = poly(self.z, self.names, "3*x1^2 + 2*x2^3")
        self.assertEqual(f.leading_data(LEX).lm, (2, 0))
        self.assertEqual(f.leading_data(LEX).lc, 3)
        self.assertEqual(f.leading_data(GREVLEX).lm, (0, 3))
        with self.assertRaises(ZeroPolynomial):
            Polynomial.zero(self.z, 2).leading_data(LEX)

    def test_format(self):
        """Test canonical text output"""
        self.assertEqual(poly(self.z, self.names, "2*x2 + 3*x1^2").format(self.names, LEX), "3*x1^2 + 2*x2")
        self.assertEqual(poly(self.z, self.names, "-x1").format(self.names), "-x1")
        self.assertEqual(Polynomial.zero(self.z, 2).format(self.names), "0")

    def test_format_polynomial_coefficients(self):
        """Test output with k[t] coefficients"""
        q = rationals()
        ring = poly_over_field(q, ["a"])
        f = poly(ring, ["x"], "(a^3 - 1)*x - a^2 + 1")
        self.assertEqual(f.format(["x"]), "(a^3 - 1)*x - a^2 + 1")
        self.assertEqual(poly(ring, ["x"], "a^2*x").format(["x"]), "a^2*x")

    def test_pure_power_index(self):
        """Test pure power detection"""
        self.assertEqual(pure_power_index((0, 3)), 1)
        self.assertIsNone(pure_power_index((1, 1)))
        self.assertIsNone(pure_power_index((0, 0)))
        self.assertEqual(monomial_lcm((2, 0), (1, 3)), (2, 3))


class TestDivide(unittest.TestCase):
    """Test cases for field division"""

    def test_exact_division(self):
        """Test x^2 - 1 divided by x - 1"""
        q = rationals()
        f = poly(q, ["x"], "x^2 - 1")
        (quotient,), remainder = divide(f, [poly(q, ["x"], "x - 1")], LEX)
        self.assertEqual(quotient, poly(q, ["x"], "x + 1"))
        self.assertTrue(remainder.is_zero())

    def test_remainder_is_irreducible(self):
        """Test that the remainder has no divisible term"""
        q = rationals()
        names = ["x", "y"]
        f = poly(q, names, "x^2*y + x*y^2 + y^2")
        divisors = [poly(q, names, "x*y - 1"), poly(q, names, "y^2 - 1")]
        quotients, remainder = divide(f, divisors, LEX)
        total = remainder
        for qq, g in zip(quotients, divisors):
            total = total + qq * g
        self.assertEqual(total, f)
        self.assertEqual(remainder, poly(q, names, "x + y + 1"))


class TestJointRing(unittest.TestCase):
    """Test cases for the k[x, t] view"""

    def test_round_trip(self):
        """Test to_joint and from_joint are inverse"""
        ring = poly_over_field(rationals(), ["a"])
        f = poly(ring, ["x"], "(a^3 - 1)*x - a^2 + 1")
        joint = to_joint(f)
        self.assertEqual(joint.nvars, 2)
        self.assertEqual(joint.coefficient((1, 3)), 1)
        self.assertEqual(from_joint(joint, ring, 1), f)

    def test_joint_leading_monomial(self):
        """Test the joint leading monomial under the block order"""
        ring = poly_over_field(rationals(), ["a"])
        f = poly(ring, ["x"], "a^2*x - a")
        self.assertEqual(joint_leading_monomial(f, LEX), (1, 2))


if __name__ == '__main__':
    unittest.main()
