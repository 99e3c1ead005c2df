import random

from django.test import SimpleTestCase

from base.exceptions import NotPrime
from base.exceptions import RingMismatch
from core_algebra.field import PrimeField
from core_algebra.polynomials import PolyRing
from core_algebra.polynomials import Polynomial
from core_algebra.polynomials import frobenius_power_poly
from core_algebra.polynomials import poly_arith


def random_polynomial(ring, rng, terms=6, max_degree=4):
    result = {}
    for _ in range(rng.randint(0, terms)):
        exponents = tuple(rng.randint(0, max_degree)
                          for _ in range(ring.nvars))
        result[exponents] = rng.randint(0, ring.characteristic - 1)
    return Polynomial(ring, result)


class PrimeFieldTest(SimpleTestCase):
    def test_small_primes(self):
        for p in (2, 3, 5, 7, 2 ** 31 - 1):
            self.assertEqual(PrimeField(p).p, p)

    def test_rejects_composites(self):
        for p in (0, 1, 4, 9, 2 ** 31):
            self.assertRaises(NotPrime, PrimeField, p)

    def test_inverse(self):
        field = PrimeField(7)
        for value in range(1, 7):
            self.assertEqual(value * field.inverse(value) % 7, 1)
        self.assertRaises(ZeroDivisionError, field.inverse, 14)

    def test_frobenius_is_identity_on_prime_field(self):
        field = PrimeField(5)
        for value in range(5):
            self.assertEqual(field.frobenius_power(value, 3), value)

    def test_q(self):
        self.assertEqual(PrimeField(3).q(4), 81)
        self.assertEqual(PrimeField(2).q(0), 1)
        self.assertRaises(ValueError, PrimeField(2).q, -1)


class PolynomialArithmeticTest(SimpleTestCase):
    def setUp(self):
        self.ring2 = PolyRing(2, ['x', 'y'])
        self.ring3 = PolyRing(3, ['x', 'y'])

    def test_square_of_sum_in_char_two(self):
        x, y = self.ring2.gens()
        self.assertEqual(poly_arith(x + y, x + y, 'mul'), x ** 2 + y ** 2)

    def test_multiply_by_one(self):
        x, y = self.ring3.gens()
        f = x * y + 2 * y ** 2
        self.assertEqual(poly_arith(f, self.ring3.one(), 'mul'), f)

    def test_monomial_product(self):
        x, y = self.ring3.gens()
        product = poly_arith(x ** 2, x * y, 'mul')
        self.assertEqual(product, self.ring3.monomial((3, 1)))
        self.assertEqual(product.homogeneous_degree, 4)

    def test_homogeneity_tracking(self):
        x, y = self.ring3.gens()
        f = x ** 2 + x * y
        g = y ** 3
        self.assertEqual((f * g).homogeneous_degree, 5)
        self.assertIsNone((f + g).homogeneous_degree)
        self.assertTrue(self.ring3.zero().is_homogeneous())

    def test_ring_mismatch(self):
        x2 = self.ring2.gen('x')
        x3 = self.ring3.gen('x')
        self.assertRaises(RingMismatch, poly_arith, x2, x3, 'add')
        self.assertRaises(RingMismatch, lambda: x2 * x3)

    def test_no_zero_coefficients_stored(self):
        x, y = self.ring3.gens()
        f = (x + y) + (2 * x)
        self.assertEqual(f, y)
        self.assertEqual(len(f), 1)

    def test_string_form(self):
        x, y = self.ring3.gens()
        self.assertEqual(str(x ** 2 + 2 * x * y), 'x^2 + 2*x*y')
        self.assertEqual(str(self.ring3.constant(2)), '2')
        self.assertEqual(str(self.ring3.zero()), '0')

    def test_agrees_with_naive_product(self):
        rng = random.Random(11)
        for ring in (self.ring2, self.ring3):
            p = ring.characteristic
            for _ in range(20):
                f = random_polynomial(ring, rng, terms=20)
                g = random_polynomial(ring, rng, terms=20)
                naive = {}
                for m1, c1 in f.terms.items():
                    for m2, c2 in g.terms.items():
                        m = tuple(a + b for a, b in zip(m1, m2))
                        naive[m] = (naive.get(m, 0) + c1 * c2) % p
                naive = dict((m, c) for m, c in naive.items() if c)
                self.assertEqual(poly_arith(f, g, 'mul').terms, naive)
                added = dict(f.terms)
                for m, c in g.terms.items():
                    added[m] = (added.get(m, 0) + c) % p
                added = dict((m, c) for m, c in added.items() if c)
                self.assertEqual(poly_arith(f, g, 'add').terms, added)


class FrobeniusPowerTest(SimpleTestCase):
    def setUp(self):
        self.ring2 = PolyRing(2, ['x', 'y'])
        self.ring3 = PolyRing(3, ['x', 'y', 'z'])

    def test_entrywise_squaring(self):
        x, y = self.ring2.gens()
        self.assertEqual(frobenius_power_poly(x * y, 1), x ** 2 * y ** 2)

    def test_level_zero_is_identity(self):
        x, y = self.ring2.gens()
        f = x ** 3 + x * y ** 2
        self.assertEqual(frobenius_power_poly(f, 0), f)

    def test_char_two_binomial(self):
        x, y = self.ring2.gens()
        self.assertEqual(frobenius_power_poly(x + y, 2), x ** 4 + y ** 4)

    def test_matches_repeated_multiplication(self):
        x, y, z = self.ring3.gens()
        f = x + 2 * y + z
        self.assertEqual(frobenius_power_poly(f, 1), f ** 3)

    def test_iterates_compose(self):
        rng = random.Random(5)
        for ring in (self.ring2, self.ring3):
            for _ in range(5):
                f = random_polynomial(ring, rng)
                for e in range(3):
                    for e2 in range(3 - e + 1):
                        self.assertEqual(
                            frobenius_power_poly(f, e + e2),
                            frobenius_power_poly(
                                frobenius_power_poly(f, e), e2))

    def test_ring_homomorphism(self):
        rng = random.Random(7)
        for ring in (self.ring2, self.ring3):
            for _ in range(10):
                f = random_polynomial(ring, rng)
                g = random_polynomial(ring, rng)
                self.assertEqual(frobenius_power_poly(f * g, 1),
                                 frobenius_power_poly(f, 1) *
                                 frobenius_power_poly(g, 1))
                self.assertEqual(frobenius_power_poly(f + g, 2),
                                 frobenius_power_poly(f, 2) +
                                 frobenius_power_poly(g, 2))

    def test_degree_multiplies_by_q(self):
        x, y, z = self.ring3.gens()
        f = x * y + z ** 2
        self.assertEqual(frobenius_power_poly(f, 2).homogeneous_degree, 18)

    def test_negative_level(self):
        self.assertRaises(ValueError, frobenius_power_poly,
                          self.ring2.gen('x'), -1)
