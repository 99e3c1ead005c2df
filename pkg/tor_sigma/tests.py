import random

from django.test import SimpleTestCase

from base.exceptions import HypothesisFails
from base.exceptions import InfiniteLength
from core_algebra.polynomials import PolyRing
from resolutions.complexes import PresentedComplex
from resolutions.minimal import minimal_free_resolution
from resolutions.modules import GradedMatrix
from resolutions.presentations import ModulePresentation
from resolutions.rings import QuotientRing
from theorems.corpus import FamilySpec
from theorems.corpus import build_instance
from tor_sigma.identities import SATISFIED
from tor_sigma.identities import VACUOUS
from tor_sigma.identities import divide_check
from tor_sigma.identities import lemma_add_check
from tor_sigma.identities import sigma_additivity_check
from tor_sigma.local import local_cohomology_h0
from tor_sigma.local import socle
from tor_sigma.tor import euler_check
from tor_sigma.tor import sigma
from tor_sigma.tor import tor_table


def quotient(p, variables, build):
    ambient = PolyRing(p, variables)
    return QuotientRing(ambient, build(*ambient.gens()))


def residue_field(ring):
    return ModulePresentation.from_ideal(ring, ring.ambient.gens())


def power_quotient(ring, n):
    """R / m^n."""
    return ModulePresentation.from_ideal(ring,
                                         (ring.maximal_ideal ** n).generators)


class RingFixtures(object):
    def setUp(self):
        self.E1 = quotient(2, ['x', 'y'], lambda x, y: [x ** 2, x * y])
        self.node = quotient(2, ['x', 'y'], lambda x, y: [x * y])
        self.plane = quotient(2, ['x', 'y'], lambda x, y: [])
        self.zring = quotient(2, ['x', 'y', 'z'],
                              lambda x, y, z: [z ** 2, z * x, z * y])
        self.x, self.y = self.E1.ambient.gens()
        self.M = ModulePresentation.from_ideal(self.E1, [self.y])


class LocalCohomologyTest(RingFixtures, SimpleTestCase):
    def test_h0(self):
        self.assertEqual(local_cohomology_h0(self.E1).length(), 1)
        self.assertTrue(local_cohomology_h0(self.node).is_zero())
        self.assertEqual(local_cohomology_h0(self.zring).length(), 1)

    def test_socle_profiles(self):
        for ring in (self.E1, self.zring):
            profile = socle(ring)
            self.assertEqual((profile.l, profile.t), (1, 0))
            self.assertTrue(profile.h0_is_vector_space)
        profile = socle(self.plane)
        self.assertEqual((profile.l, profile.t), (0, 0))

    def test_socle_smaller_than_h0(self):
        ring = quotient(2, ['x', 'y'], lambda x, y: [x ** 3, x * y])
        profile = socle(ring)
        self.assertEqual(profile.h0_length, 2)
        self.assertEqual((profile.l, profile.t), (1, 1))
        self.assertFalse(profile.h0_is_vector_space)
        self.assertEqual(profile.to_data(),
                         {'h0_length': '2', 'l': '1', 't': '1',
                          'h0_is_vector_space': False})


class TorTest(RingFixtures, SimpleTestCase):
    def test_residue_field_gives_betti_numbers(self):
        k = residue_field(self.node)
        self.assertEqual(tor_table(k, k, 3).lengths, [1, 2, 2, 2])

    def test_vanishing_tor(self):
        other = ModulePresentation.from_ideal(self.E1, [self.x])
        self.assertEqual(tor_table(self.M, other, 1)[1], 0)

    def test_balanced(self):
        other = power_quotient(self.E1, 2)
        self.assertEqual(tor_table(self.M, other, 3).lengths,
                         tor_table(other, self.M, 3).lengths)

    def test_bounded_by_betti_numbers(self):
        k = residue_field(self.E1)
        for n in (2, 3):
            other = power_quotient(self.E1, n)
            bound = other.length()
            table = tor_table(self.M, other, 3)
            betti = tor_table(self.M, k, 3)
            for j in range(4):
                self.assertLessEqual(table[j], bound * betti[j])

    def test_randomized_monomial_instances(self):
        family = FamilySpec(nvars=2, max_degree=3, max_generators=2,
                            depth_zero=False, modules=('m2', 'm3'))
        rng = random.Random(11)
        for data in rng.sample(list(family.instances()), 5):
            ring, module = build_instance(data)
            other = power_quotient(ring, rng.randint(1, 3))
            table = tor_table(module, other, 3)
            self.assertEqual(table.lengths,
                             tor_table(other, module, 3).lengths)
            betti = tor_table(module, residue_field(ring), 3)
            for j in range(4):
                self.assertLessEqual(table[j], other.length() * betti[j])

    def test_first_argument_needs_finite_length(self):
        module = ModulePresentation.free(self.node, [0])
        self.assertRaises(InfiniteLength, tor_table, module,
                          residue_field(self.node), 1)

    def test_sigma(self):
        k = residue_field(self.node)
        self.assertEqual(sigma(k, k, 0), -1)
        self.assertEqual(sigma(self.M, power_quotient(self.E1, 3), 1), 1)

    def test_serialization(self):
        k = residue_field(self.node)
        self.assertEqual(tor_table(k, k, 1).to_data(),
                         [{'j': 0, 'length': '1'}, {'j': 1, 'length': '2'}])


class EulerCheckTest(RingFixtures, SimpleTestCase):
    def test_zero_map(self):
        k = residue_field(self.E1)
        zero = GradedMatrix.zero(k.cover, k.cover)
        result = euler_check(PresentedComplex([k, k], [zero]))
        self.assertEqual((result.lhs, result.rhs), (0, 0))
        self.assertTrue(result.equal)

    def test_zero_complex(self):
        result = euler_check(PresentedComplex(
            [ModulePresentation.zero(self.E1)], []))
        self.assertEqual((result.lhs, result.rhs), (0, 0))

    def test_truncated_resolutions_tensored(self):
        count = 0
        for ring in (self.E1, self.node):
            x, y = ring.ambient.gens()
            for module in (residue_field(ring),
                           ModulePresentation.from_ideal(ring, [y])):
                for steps in (1, 2):
                    resolution = minimal_free_resolution(module, steps)
                    for n in (2, 3):
                        complex_ = resolution.tensor(power_quotient(ring, n))
                        self.assertTrue(euler_check(complex_).equal)
                        count += 1
        self.assertGreaterEqual(count, 10)

    def test_infinite_term(self):
        resolution = minimal_free_resolution(residue_field(self.node), 1)
        self.assertRaises(InfiniteLength, euler_check, resolution)


class AddIdentityTest(RingFixtures, SimpleTestCase):
    def test_chains_hold(self):
        report = lemma_add_check(self.E1, self.M, self.y, j_max=4)
        self.assertEqual(report.hypothesis, SATISFIED)
        self.assertEqual(report.rows[0].values, [1, 1, 1])
        self.assertEqual(len(report.rows), 2 + 2 * 3)
        for row in report.rows:
            self.assertTrue(row.equal, row.label)
        self.assertTrue(report.holds)

    def test_hypothesis_fails(self):
        self.assertRaises(HypothesisFails, lemma_add_check, self.E1, self.M,
                          self.x)


class DivideTest(RingFixtures, SimpleTestCase):
    def test_vacuous_on_infinite_syzygy(self):
        report = divide_check(self.E1, self.M, 2)
        self.assertEqual(report.hypothesis, VACUOUS)
        self.assertIsNone(report.holds)

    def test_vacuous_below_index_two(self):
        self.assertEqual(divide_check(self.E1, self.M, 1).hypothesis,
                         VACUOUS)

    def test_positive_depth(self):
        self.assertRaises(HypothesisFails, divide_check, self.node,
                          residue_field(self.node), 2)


class SigmaAdditivityTest(RingFixtures, SimpleTestCase):
    def test_split_and_supplied_sequence(self):
        first = ModulePresentation.ideal_module(self.E1, [self.x])
        third = ModulePresentation.from_ideal(self.E1, [self.x])
        middle = ModulePresentation.free(self.E1, [0])
        report = sigma_additivity_check(self.M, first, third, 0, middle)
        self.assertEqual(len(report.rows), 2)
        self.assertEqual(report.rows[1].values, [-2, -2])
        self.assertTrue(report.holds)

    def test_supplied_sequence_skipped(self):
        first = ModulePresentation.ideal_module(self.E1, [self.x])
        third = ModulePresentation.from_ideal(self.E1, [self.x])
        middle = ModulePresentation.free(self.E1, [0])
        report = sigma_additivity_check(self.M, first, third, 1, middle)
        self.assertEqual(len(report.rows), 1)
        self.assertTrue(report.note.startswith('Tor_2(M, N3)'))
