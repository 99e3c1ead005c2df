import itertools
import random

from django.test import SimpleTestCase
from django.test.utils import override_settings

from base.exceptions import InfiniteLength
from base.exceptions import NonHomogeneous
from base.exceptions import NotMonomial
from base.exceptions import RingMismatch
from base.exceptions import SaturationCapExceeded
from core_algebra.polynomials import PolyRing
from groebner.basis import GroebnerBasis
from groebner.basis import buchberger
from groebner.basis import normal_form
from groebner.hilbert import hilbert_function
from groebner.hilbert import krull_dimension
from groebner.hilbert import length_of_quotient
from groebner.hilbert import min_primes_monomial
from groebner.hilbert import standard_monomials
from groebner.ideals import HomogeneousIdeal
from groebner.ideals import ideal_quotient
from groebner.ideals import maximal_ideal
from groebner.ideals import monomial_radical
from groebner.ideals import monomials_of_degree
from groebner.ideals import power_of_maximal_ideal
from groebner.ideals import saturation
from groebner.ideals import unit_ideal
from groebner.syzygies import syzygy_vectors


def as_set(polynomials):
    return set(polynomials)


class BuchbergerTest(SimpleTestCase):
    def setUp(self):
        self.ring = PolyRing(2, ['x', 'y'])
        self.x, self.y = self.ring.gens()

    def test_monomial_ideal_is_its_own_basis(self):
        gb = buchberger(self.ring, [self.x ** 2, self.x * self.y])
        self.assertEqual(as_set(gb.polynomials()),
                         {self.x ** 2, self.x * self.y})
        self.assertTrue(gb.is_monomial())

    def test_principal(self):
        gb = buchberger(self.ring, [self.x])
        self.assertEqual(gb.polynomials(), [self.x])

    def test_hand_computed_basis(self):
        ring = PolyRing(3, ['x', 'y'])
        x, y = ring.gens()
        gb = buchberger(ring, [x * y, x ** 2 + y ** 2])
        # S(xy, x^2 + y^2) = -y^3 is the only new element.
        self.assertEqual(as_set(gb.polynomials()),
                         {x ** 2 + y ** 2, x * y, y ** 3})
        self.assertEqual(sorted(gb.lead_monomials()),
                         [(0, 3), (1, 1), (2, 0)])
        self.assertTrue(gb.satisfies_buchberger_criterion())

    def test_idempotent_on_reduced_basis(self):
        ring = PolyRing(3, ['x', 'y', 'z'])
        x, y, z = ring.gens()
        gb = buchberger(ring, [x * y - z ** 2, y ** 2 - x * z])
        self.assertEqual(buchberger(ring, gb.polynomials()), gb)

    def test_reduced_flag_invariant(self):
        ring = PolyRing(5, ['x', 'y', 'z'])
        x, y, z = ring.gens()
        gb = buchberger(ring, [x ** 2 + y * z, x * y + z ** 2, y ** 3])
        self.assertTrue(gb.reduced)
        leads = gb.leads
        for vector, lead in zip(gb.generators, leads):
            for other in leads:
                if other is lead:
                    continue
                for (_, monomial) in vector:
                    self.assertFalse(all(a <= b for a, b in
                                         zip(other[1], monomial)))

    def test_non_homogeneous_rejected(self):
        self.assertRaises(NonHomogeneous, buchberger, self.ring,
                          [self.x ** 2 + self.y])

    def test_ring_mismatch(self):
        other = PolyRing(3, ['x', 'y'])
        self.assertRaises(RingMismatch, buchberger, self.ring,
                          [other.gen('x')])

    def test_round_trip_through_data(self):
        gb = buchberger(self.ring, [self.x ** 2 + self.x * self.y,
                                    self.y ** 3])
        self.assertEqual(GroebnerBasis.from_data(self.ring, gb.to_data()), gb)

    def test_unit_ideal(self):
        gb = buchberger(self.ring, [self.x, self.ring.one()])
        self.assertTrue(gb.is_unit())
        self.assertEqual(gb.polynomials(), [self.ring.one()])


class NormalFormTest(SimpleTestCase):
    def setUp(self):
        self.ring = PolyRing(2, ['x', 'y'])
        self.x, self.y = self.ring.gens()
        self.gb = buchberger(self.ring, [self.x ** 2, self.x * self.y])

    def test_multiple_of_generator(self):
        self.assertEqual(normal_form(self.x ** 3, self.gb), self.ring.zero())

    def test_standard_monomial(self):
        self.assertEqual(normal_form(self.y ** 2, self.gb), self.y ** 2)

    def test_reduce_one_term(self):
        self.assertEqual(normal_form(self.x ** 2 + self.y, self.gb), self.y)

    def test_membership_soundness(self):
        rng = random.Random(3)
        for p in (2, 3):
            ring = PolyRing(p, ['x', 'y', 'z'])
            x, y, z = ring.gens()
            gens = [x * y + z ** 2, y ** 2 + 2 * x * z, x ** 3]
            gb = buchberger(ring, gens)
            for _ in range(10):
                f = ring.zero()
                for g in gens:
                    multiplier = ring.zero()
                    for monomial in monomials_of_degree(3, 2):
                        multiplier = multiplier + ring.monomial(
                            monomial, rng.randint(0, p - 1))
                    f = f + multiplier * g
                self.assertTrue(gb.contains(f))
            for degree in range(6):
                for monomial in standard_monomials(gb, degree):
                    self.assertFalse(gb.contains(ring.monomial(monomial)))


class IdealQuotientTest(SimpleTestCase):
    def setUp(self):
        self.ring = PolyRing(2, ['x', 'y'])
        self.x, self.y = self.ring.gens()
        self.I = HomogeneousIdeal(self.ring, [self.x ** 2, self.x * self.y])

    def test_quotient_by_variable(self):
        quotient = ideal_quotient(self.I, HomogeneousIdeal(self.ring, [self.y]))
        self.assertEqual(quotient, HomogeneousIdeal(self.ring, [self.x]))

    def test_quotient_by_maximal_ideal(self):
        quotient = ideal_quotient(self.I, maximal_ideal(self.ring))
        self.assertEqual(quotient, HomogeneousIdeal(self.ring, [self.x]))

    def test_quotient_by_unit_ideal(self):
        self.assertEqual(ideal_quotient(self.I, unit_ideal(self.ring)),
                         self.I)

    def test_quotient_by_zero_ideal(self):
        self.assertTrue(ideal_quotient(
            self.I, HomogeneousIdeal(self.ring, [])).is_unit())

    def test_non_monomial_quotient(self):
        ring = PolyRing(3, ['x', 'y'])
        x, y = ring.gens()
        I = HomogeneousIdeal(ring, [x * y, x ** 2 + y ** 2])
        # x^3 = x(x^2 + y^2) - y(xy), so x annihilates m^2 modulo I.
        quotient = ideal_quotient(I, power_of_maximal_ideal(ring, 2))
        self.assertTrue(quotient.contains(x))
        self.assertTrue(quotient.contains(y))

    def test_saturation_examples(self):
        m = maximal_ideal(self.ring)
        self.assertEqual(saturation(self.I, m),
                         HomogeneousIdeal(self.ring, [self.x]))
        self.assertEqual(saturation(self.I, unit_ideal(self.ring)), self.I)
        ring = PolyRing(2, ['x', 'y', 'z'])
        x, y, z = ring.gens()
        I = HomogeneousIdeal(ring, [z ** 2, z * x, z * y])
        self.assertEqual(saturation(I, maximal_ideal(ring)),
                         HomogeneousIdeal(ring, [z]))

    @override_settings(FROBSYZ_SATURATION_CAP=1)
    def test_saturation_cap(self):
        I = HomogeneousIdeal(self.ring, [self.x ** 3, self.x ** 2 * self.y])
        self.assertRaises(SaturationCapExceeded, saturation, I,
                          maximal_ideal(self.ring))

    def test_chain_against_monomial_oracle(self):
        ring = PolyRing(2, ['x', 'y', 'z'])
        x, y, z = ring.gens()
        instances = [
            ([x ** 2 * y, y ** 3, x * z ** 2], [x, y]),
            ([x ** 3, x * y * z, z ** 4], [y * z]),
            ([x * y, y * z, z ** 3], [z, x ** 2]),
        ]

        def in_monomial_ideal(monomial, gens):
            return any(all(a <= b for a, b in zip(list(g.terms)[0], monomial))
                       for g in gens)

        for gens, jgens in instances:
            I = HomogeneousIdeal(ring, gens)
            J = HomogeneousIdeal(ring, jgens)
            quotient = ideal_quotient(I, J)
            saturated = saturation(I, J)
            self.assertTrue(quotient.contains_ideal(I))
            self.assertTrue(saturated.contains_ideal(quotient))
            self.assertEqual(ideal_quotient(quotient, J),
                             ideal_quotient(I, J * J))
            for degree in range(6):
                for monomial in monomials_of_degree(3, degree):
                    expected = all(
                        in_monomial_ideal(
                            tuple(a + b for a, b in
                                  zip(monomial, list(g.terms)[0])), gens)
                        for g in jgens)
                    self.assertEqual(quotient.contains(ring.monomial(monomial)),
                                     expected)


class HilbertTest(SimpleTestCase):
    def setUp(self):
        self.ring = PolyRing(2, ['x', 'y'])
        self.x, self.y = self.ring.gens()
        self.E1 = HomogeneousIdeal(self.ring, [self.x ** 2, self.x * self.y])

    def test_hilbert_function(self):
        self.assertEqual(hilbert_function(self.E1, 1), 2)
        self.assertEqual(hilbert_function(self.E1, 3), 1)
        self.assertEqual(hilbert_function(self.E1, 0), 1)
        self.assertEqual(hilbert_function(self.E1, -1), 0)

    def test_krull_dimension(self):
        self.assertEqual(krull_dimension(self.E1), 1)
        ring = PolyRing(2, ['x', 'y', 'z'])
        x, y, z = ring.gens()
        self.assertEqual(krull_dimension(
            HomogeneousIdeal(ring, [z ** 2, z * x, z * y])), 2)
        self.assertEqual(krull_dimension(
            HomogeneousIdeal(self.ring, [self.x ** 2, self.y ** 3])), 0)
        self.assertEqual(krull_dimension(unit_ideal(self.ring)), -1)

    def test_length(self):
        self.assertEqual(length_of_quotient(
            HomogeneousIdeal(self.ring, [self.x ** 2, self.y ** 3])), 6)
        self.assertEqual(length_of_quotient(
            self.E1 + HomogeneousIdeal(self.ring, [self.y])), 2)
        self.assertEqual(length_of_quotient(maximal_ideal(self.ring)), 1)
        self.assertEqual(length_of_quotient(unit_ideal(self.ring)), 0)

    def test_infinite_length(self):
        self.assertRaises(InfiniteLength, length_of_quotient, self.E1)

    def test_powers_of_maximal_ideal(self):
        for p in (2, 3):
            ring = PolyRing(p, ['x', 'y'])
            for k in range(1, 7):
                self.assertEqual(
                    length_of_quotient(power_of_maximal_ideal(ring, k)),
                    k * (k + 1) // 2)

    def test_dimension_zero_iff_length_terminates(self):
        ring = PolyRing(2, ['x', 'y', 'z'])
        x, y, z = ring.gens()
        ideals = [
            [x ** 2, y ** 2, z ** 2],
            [x * y, z ** 2],
            [x ** 2 + y * z, y ** 2, z ** 3],
            [z ** 2, z * x, z * y],
            [x ** 3, y ** 2, x * z, z ** 2 + x * y],
        ]
        for gens in ideals:
            ideal = HomogeneousIdeal(ring, gens)
            if krull_dimension(ideal) == 0:
                self.assertGreater(length_of_quotient(ideal), 0)
            else:
                self.assertRaises(InfiniteLength, length_of_quotient, ideal)

    def test_min_primes(self):
        self.assertEqual(min_primes_monomial(
            HomogeneousIdeal(self.ring, [self.x * self.y])),
            [frozenset([0]), frozenset([1])])
        self.assertEqual(min_primes_monomial(self.E1), [frozenset([0])])
        ring = PolyRing(2, ['x', 'y', 'z'])
        x, y, z = ring.gens()
        self.assertEqual(min_primes_monomial(
            HomogeneousIdeal(ring, [z ** 2, z * x, z * y])), [frozenset([2])])

    def test_min_primes_rejects_non_monomial(self):
        self.assertRaises(NotMonomial, min_primes_monomial,
                          HomogeneousIdeal(self.ring, [self.x ** 2 +
                                                       self.y ** 2]))

    def test_monomial_radical(self):
        self.assertEqual(monomial_radical(self.E1),
                         HomogeneousIdeal(self.ring, [self.x]))


class SyzygyVectorTest(SimpleTestCase):
    def test_kernel_of_row_over_node(self):
        ring = PolyRing(2, ['x', 'y'])
        x, y = ring.gens()
        ideal_gb = buchberger(ring, [x * y])
        vectors = syzygy_vectors(ring, [[x], [y]], [0], [1, 1], ideal_gb)
        found = set(frozenset(v.items()) for v in vectors)
        self.assertEqual(found, {
            frozenset({((0, (0, 1)), 1)}),
            frozenset({((1, (1, 0)), 1)}),
        })

    def test_injective_map_has_no_kernel(self):
        ring = PolyRing(2, ['x', 'y'])
        columns = [[ring.one(), ring.zero()], [ring.zero(), ring.one()]]
        self.assertEqual(syzygy_vectors(ring, columns, [0, 0], [0, 0]), [])

    def test_kernel_of_polynomial_row(self):
        ring = PolyRing(3, ['x', 'y', 'z'])
        x, y, z = ring.gens()
        vectors = syzygy_vectors(ring, [[x], [y], [z]], [0], [1, 1, 1])
        # the three Koszul relations
        self.assertEqual(len(vectors), 3)
        for vector in vectors:
            total = ring.zero()
            for (position, monomial), coefficient in vector.items():
                total = total + ring.monomial(monomial, coefficient) * \
                    [x, y, z][position]
            self.assertEqual(total, ring.zero())
        self.assertTrue(all(len(v) == 2 for v in vectors))
        self.assertEqual(len(list(itertools.chain(*vectors))), 6)
