"""
Unit tests for coeffring module
"""

import unittest
from fractions import Fraction

from ringbasis.coeffring import (
    RingKind,
    coefficient_ideal,
    eta,
    integers,
    leading_generators,
    membership_witness,
    minimal_generators,
    poly_over_field,
    prime_field,
    rationals,
    xgcd,
)
from ringbasis.errors import RingMismatch, UnsupportedRing
from ringbasis.poly import Polynomial
from tests.helpers import poly


class TestXgcd(unittest.TestCase):
    """Test cases for the extended Euclidean algorithm"""

    def test_bezout_identity(self):
        """Test x*a + y*b == g on a few pairs"""
        for a, b in [(240, 46), (3, 5), (-12, 18), (0, 7), (7, 0), (-4, -6)]:
            x, y, g = xgcd(a, b)
            self.assertEqual(x * a + y * b, g)
            self.assertGreaterEqual(g, 0)

    def test_gcd_value(self):
        """Test the gcd itself"""
        self.assertEqual(xgcd(240, 46)[2], 2)
        self.assertEqual(xgcd(0, 0)[2], 0)


class TestRingDescriptor(unittest.TestCase):
    """Test cases for RingDescriptor"""

    def test_kinds(self):
        """Test ring kinds and field detection"""
        self.assertEqual(integers().kind, RingKind.INTEGERS)
        self.assertFalse(integers().is_field)
        self.assertTrue(rationals().is_field)
        self.assertTrue(prime_field(7).is_field)
        self.assertTrue(poly_over_field(rationals(), ["a"]).is_polynomial)

    def test_prime_field_rejects_composite(self):
        """Test that GF(8) is refused"""
        with self.assertRaises(UnsupportedRing):
            prime_field(8)

    def test_poly_ring_needs_field_base(self):
        """Test that Z[a] is refused"""
        with self.assertRaises(UnsupportedRing):
            poly_over_field(integers(), ["a"])
        with self.assertRaises(UnsupportedRing):
            poly_over_field(rationals(), ["a", "a"])

    def test_canonical_prime_field(self):
        """Test rational literals in GF(7)"""
        gf7 = prime_field(7)
        self.assertEqual(gf7.canonical(Fraction(1, 2)), 4)
        self.assertEqual(gf7.canonical(-1), 6)
        with self.assertRaises(RingMismatch):
            gf7.canonical(Fraction(1, 7))

    def test_canonical_integers(self):
        """Test that fractions are refused over Z"""
        with self.assertRaises(RingMismatch):
            integers().canonical(Fraction(1, 2))
        self.assertEqual(integers().canonical(Fraction(4, 2)), 2)

    def test_units(self):
        """Test unit detection per ring"""
        self.assertTrue(integers().is_unit(-1))
        self.assertFalse(integers().is_unit(2))
        self.assertTrue(rationals().is_unit(Fraction(2, 3)))
        ring = poly_over_field(rationals(), ["a"])
        a = Polynomial.variable(rationals(), 1, 0)
        self.assertFalse(ring.is_unit(a))
        self.assertTrue(ring.is_unit(ring.from_int(3)))

    def test_header(self):
        """Test header rendering"""
        self.assertEqual(integers().to_header(), "Z")
        self.assertEqual(prime_field(5).to_header(), "GF(5)")
        ring = poly_over_field(prime_field(7), ["t1", "t2"], "grevlex")
        self.assertEqual(ring.to_header(), "GF(7)[t1,t2] order grevlex")


class TestIntegerIdeals(unittest.TestCase):
    """Test cases for ideals of Z"""

    def setUp(self):
        """Set up test fixtures"""
        self.ring = integers()

    def test_minimal_generators(self):
        """Test that the gcd generates"""
        self.assertEqual(minimal_generators(self.ring, [6, 10, 15]), [1])
        self.assertEqual(minimal_generators(self.ring, [8, 12]), [4])
        self.assertEqual(minimal_generators(self.ring, [0, 0]), [])

    def test_eta(self):
        """Test residues modulo the gcd"""
        ideal = coefficient_ideal(self.ring, [8, 12])
        self.assertEqual(eta(ideal, 13), 1)
        self.assertEqual(eta(ideal, -3), 1)
        self.assertEqual(eta(coefficient_ideal(self.ring, []), -3), -3)

    def test_membership_witness(self):
        """Test witnesses combine back to the element"""
        ideal = coefficient_ideal(self.ring, [6, 10, 15])
        witness = membership_witness(ideal, 7)
        self.assertEqual(sum(b * g for b, g in zip(witness, [6, 10, 15])), 7)
        self.assertIsNone(membership_witness(coefficient_ideal(self.ring, [4, 6]), 3))
        self.assertIn(8, coefficient_ideal(self.ring, [4, 6]))

    def test_leading_generators(self):
        """Test generator choice against lower ideals"""
        ring = self.ring
        self.assertEqual(leading_generators(coefficient_ideal(ring, [1]), coefficient_ideal(ring, [])), [1])
        self.assertEqual(leading_generators(coefficient_ideal(ring, [2]), coefficient_ideal(ring, [4])), [2])
        self.assertEqual(leading_generators(coefficient_ideal(ring, [2]), coefficient_ideal(ring, [2])), [])
        self.assertEqual(leading_generators(coefficient_ideal(ring, [2, 3]), coefficient_ideal(ring, [3])), [1])


class TestFieldIdeals(unittest.TestCase):
    """Test cases for ideals of fields"""

    def test_unit_ideal(self):
        """Test that any nonzero element generates"""
        q = rationals()
        ideal = coefficient_ideal(q, [Fraction(0), Fraction(3, 4)])
        self.assertEqual(ideal.min_generators, (Fraction(1),))
        self.assertEqual(eta(ideal, Fraction(5)), 0)
        witness = membership_witness(ideal, Fraction(2))
        self.assertEqual(witness[1] * Fraction(3, 4), Fraction(2))

    def test_zero_ideal(self):
        """Test the zero ideal of GF(5)"""
        ideal = coefficient_ideal(prime_field(5), [0])
        self.assertTrue(ideal.is_zero())
        self.assertEqual(eta(ideal, 3), 3)


class TestPolynomialIdeals(unittest.TestCase):
    """Test cases for ideals of k[t]"""

    def setUp(self):
        """Set up test fixtures"""
        self.q = rationals()
        self.ring = poly_over_field(self.q, ["a"])

    def test_principal_ideal(self):
        """Test that a^2 - a and a^3 - 1 generate <a - 1>"""
        gens = [poly(self.q, ["a"], "a^2 - a"), poly(self.q, ["a"], "a^3 - 1")]
        ideal = coefficient_ideal(self.ring, gens)
        self.assertEqual(ideal.min_generators, (poly(self.q, ["a"], "a - 1"),))
        self.assertEqual(eta(ideal, poly(self.q, ["a"], "a^2")), self.ring.one())

    def test_witness_recombines(self):
        """Test membership witnesses in k[t]"""
        gens = [poly(self.q, ["a"], "a^2 - a"), poly(self.q, ["a"], "a^3 - 1")]
        ideal = coefficient_ideal(self.ring, gens)
        target = poly(self.q, ["a"], "a^2 - 1")
        witness = membership_witness(ideal, target)
        total = Polynomial.zero(self.q, 1)
        for b, g in zip(witness, gens):
            total = total + b * g
        self.assertEqual(total, target)
        self.assertNotIn(poly(self.q, ["a"], "a"), ideal)

    def test_leading_generators_skip_lower_monomials(self):
        """Test that reduced-basis elements already led by the lower ideal are skipped"""
        ring = poly_over_field(self.q, ["a1", "a2"])
        names = ["a1", "a2"]
        full = coefficient_ideal(ring, [poly(self.q, names, "a1^2"), poly(self.q, names, "a2^2")])
        lower = coefficient_ideal(ring, [poly(self.q, names, "a1^2")])
        self.assertEqual(leading_generators(full, lower), [poly(self.q, names, "a2^2")])


if __name__ == '__main__':
    unittest.main()
