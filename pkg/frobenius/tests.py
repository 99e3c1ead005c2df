from fractions import Fraction

from django.test import SimpleTestCase

from base.exceptions import HypothesisFails
from base.exceptions import InfiniteLength
from base.exceptions import NotMonomial
from core_algebra.polynomials import PolyRing
from frobenius.estimates import DECAYING
from frobenius.estimates import EXACT_ZERO
from frobenius.estimates import FBettiEstimate
from frobenius.estimates import INCONCLUSIVE
from frobenius.estimates import POSITIVE
from frobenius.estimates import Sample
from frobenius.estimates import _window_outcomes
from frobenius.estimates import fbetti_estimate
from frobenius.estimates import format_rational
from frobenius.estimates import leading_coefficient
from frobenius.estimates import vanishing_report
from frobenius.functor import FrobeniusLevel
from frobenius.functor import bracket_power_ideal
from frobenius.functor import frobenius_complex
from frobenius.functor import frobenius_homology_lengths
from frobenius.limits import _holds
from frobenius.limits import nilpotent_limit_check
from frobenius.limits import primes_limit_check
from groebner.hilbert import length_of_quotient
from groebner.ideals import HomogeneousIdeal
from groebner.ideals import maximal_ideal
from resolutions.complexes import FreeComplex
from resolutions.minimal import minimal_free_resolution
from resolutions.modules import GradedFreeModule
from resolutions.modules import GradedMatrix
from resolutions.oracle import homology_length_oracle
from resolutions.presentations import ModulePresentation
from resolutions.rings import QuotientRing


def quotient(p, variables, build):
    ambient = PolyRing(p, variables)
    return QuotientRing(ambient, build(*ambient.gens()))


def residue_field(ring):
    return ModulePresentation.from_ideal(ring, ring.ambient.gens())


def chain(ring, twists, entries):
    """A complex R(-t_0) <- R(-t_1) <- ... with 1 x 1 maps."""
    modules = [GradedFreeModule(ring, [t]) for t in twists]
    maps = [GradedMatrix(modules[j], modules[j - 1], [[f]])
            for j, f in enumerate(entries, 1)]
    return FreeComplex(modules, maps)


class FrobeniusFunctorTest(SimpleTestCase):
    def setUp(self):
        self.ambient = PolyRing(2, ['x', 'y'])
        self.x, self.y = self.ambient.gens()
        self.node = QuotientRing(self.ambient, [self.x * self.y])
        self.resolution = minimal_free_resolution(residue_field(self.node), 3)

    def test_level(self):
        self.assertEqual(FrobeniusLevel(3, 2).q, 9)
        self.assertEqual(FrobeniusLevel(2, 0).q, 1)
        self.assertRaises(ValueError, FrobeniusLevel, 2, -1)

    def test_bracket_power(self):
        x, y = self.x, self.y
        ideal = HomogeneousIdeal(self.ambient, [x ** 2, x * y])
        self.assertEqual(bracket_power_ideal(ideal, 1),
                         HomogeneousIdeal(self.ambient,
                                          [x ** 4, x ** 2 * y ** 2]))
        self.assertEqual(bracket_power_ideal(ideal, 0), ideal)

    def test_bracket_power_of_maximal_ideal(self):
        m = maximal_ideal(self.ambient)
        for e in range(1, 5):
            self.assertEqual(length_of_quotient(bracket_power_ideal(m, e)),
                             4 ** e)

    def test_level_zero_is_identity(self):
        self.assertIs(frobenius_complex(self.resolution, 0), self.resolution)

    def test_entries_and_twists(self):
        twisted = frobenius_complex(self.resolution, 1)
        phi = twisted.phi(1)
        self.assertEqual(phi.entries, [[self.x ** 2, self.y ** 2]])
        self.assertEqual(twisted.module(1).twists, [2, 2])
        self.assertEqual(twisted.module(3).twists, [6, 6])

    def test_ranks_preserved(self):
        for e in range(1, 5):
            twisted = frobenius_complex(self.resolution, e)
            self.assertEqual(twisted.betti_numbers(),
                             self.resolution.betti_numbers())

    def test_functoriality(self):
        for e in range(0, 3):
            for f in range(0, 3 - e + 1):
                self.assertEqual(
                    frobenius_complex(frobenius_complex(self.resolution, e),
                                      f),
                    frobenius_complex(self.resolution, e + f))


class FrobeniusHomologyTest(SimpleTestCase):
    def setUp(self):
        self.plane = quotient(2, ['x', 'y'], lambda x, y: [])
        self.node = quotient(2, ['x', 'y'], lambda x, y: [x * y])

    def test_regular_ring_box_module(self):
        x, y = self.plane.ambient.gens()
        module = ModulePresentation.from_ideal(self.plane, [x ** 2, y ** 3])
        table = frobenius_homology_lengths(module, 2, e_max=3)
        self.assertEqual(table.row(0), [6 * 4 ** e for e in range(4)])
        self.assertEqual(table.row(1), [0, 0, 0, 0])
        self.assertEqual(table.row(2), [0, 0, 0, 0])

    def test_residue_field_of_regular_ring(self):
        table = frobenius_homology_lengths(residue_field(self.plane), 0,
                                           e_max=4)
        self.assertEqual(table.row(0), [1, 4, 16, 64, 256])

    def test_node_residue_field(self):
        table = frobenius_homology_lengths(residue_field(self.node), 1,
                                           e_max=3)
        self.assertEqual(table.row(1), [2 * (2 ** e - 1) for e in range(4)])
        self.assertEqual(table.to_data()[1]['lengths'],
                         ['0', '2', '6', '14'])

    def test_agrees_with_oracle(self):
        table = frobenius_homology_lengths(residue_field(self.node), 2,
                                           e_max=2)
        for e in range(3):
            twisted = frobenius_complex(table.resolution, e)
            for i in range(3):
                self.assertEqual(table[(i, e)],
                                 homology_length_oracle(twisted, i))

    def test_infinite_length_module(self):
        module = ModulePresentation.free(self.node, [0])
        self.assertRaises(InfiniteLength, frobenius_homology_lengths, module,
                          1, 1)


class VerdictTest(SimpleTestCase):
    def test_exact_zero(self):
        estimate = FBettiEstimate.from_lengths(1, 2, 1, [3, 0, 0, 0])
        self.assertEqual(estimate.verdict, EXACT_ZERO)

    def test_positive(self):
        estimate = FBettiEstimate.from_lengths(1, 2, 1, [0, 2, 6, 14])
        self.assertEqual(estimate.verdict, POSITIVE)
        self.assertEqual(estimate.ratios, [Fraction(0), Fraction(1),
                                           Fraction(3, 2), Fraction(7, 4)])

    def test_decaying(self):
        estimate = FBettiEstimate.from_lengths(1, 2, 1, [1, 1, 1, 1])
        self.assertEqual(estimate.verdict, DECAYING)

    def test_inconclusive(self):
        self.assertEqual(
            FBettiEstimate.from_lengths(1, 2, 1, [0, 1, 0, 1]).verdict,
            INCONCLUSIVE)
        self.assertEqual(FBettiEstimate.from_lengths(1, 2, 1, [0, 1]).verdict,
                         INCONCLUSIVE)

    def test_artinian_ring(self):
        estimate = FBettiEstimate.from_lengths(0, 3, 0, [3, 3, 3])
        self.assertEqual(estimate.verdict, POSITIVE)

    def test_samples_must_increase(self):
        samples = [Sample(2, 1, Fraction(1, 4)), Sample(1, 1, Fraction(1, 2))]
        self.assertRaises(ValueError, FBettiEstimate, 1, 2, 1, samples)

    def test_rationals_serialize_as_strings(self):
        self.assertEqual(format_rational(Fraction(14, 8)), '7/4')
        self.assertEqual(format_rational(6), '6')
        data = FBettiEstimate.from_lengths(1, 2, 1, [0, 2, 6]).to_data()
        self.assertEqual(data['samples'][2],
                         {'e': 2, 'length': '6', 'ratio': '3/2'})
        self.assertEqual(data['verdict'], POSITIVE)

    def test_ratios_falling_to_a_positive_limit(self):
        estimate = FBettiEstimate.from_lengths(1, 2, 2, [0, 7, 19, 67])
        self.assertEqual(estimate.verdict, POSITIVE)
        self.assertEqual(leading_coefficient(estimate.samples[1:], 2, 2), 1)

    def test_lower_order_growth_is_not_positive(self):
        estimate = FBettiEstimate.from_lengths(1, 2, 2, [0, 3, 5, 9])
        self.assertEqual(estimate.verdict, DECAYING)

    def test_depth_zero_windows_of_three(self):
        # lambda_e(i) = q^2 b_(i-1) + b_i over F_2[x,y,z]/(z^2, zx, zy)
        betti = [1, 3, 6, 13, 28, 60, 129]
        indices = list(range(1, 7))
        estimates = dict(
            (i, FBettiEstimate.from_lengths(
                i, 2, 2, [0] + [q * q * betti[i - 1] + betti[i]
                                for q in (2, 4, 8, 16)]))
            for i in indices)
        self.assertEqual(set(e.verdict for e in estimates.values()),
                         {POSITIVE})
        windows = _window_outcomes(estimates, indices, 3)
        self.assertEqual([w['outcome'] for w in windows], ['positive'] * 4)


class EstimateTest(SimpleTestCase):
    def setUp(self):
        self.plane = quotient(2, ['x', 'y'], lambda x, y: [])
        self.node = quotient(2, ['x', 'y'], lambda x, y: [x * y])

    def test_node_residue_field_is_positive(self):
        estimate = fbetti_estimate(residue_field(self.node), 1, e_max=3)
        self.assertEqual(estimate.verdict, POSITIVE)
        self.assertEqual(estimate.ratios[-1], Fraction(7, 4))

    def test_finite_projective_dimension_vanishes(self):
        x, y = self.plane.ambient.gens()
        module = ModulePresentation.from_ideal(self.plane, [x ** 2, y ** 3])
        self.assertEqual(fbetti_estimate(module, 1, e_max=2).verdict,
                         EXACT_ZERO)

    def test_vanishing_report_finite(self):
        x, y = self.plane.ambient.gens()
        module = ModulePresentation.from_ideal(self.plane, [x ** 2, y ** 3])
        report = vanishing_report(module, window=(1, 2), e_max=2)
        self.assertEqual(report.projective_dimension, 2)
        self.assertTrue(report.finite_pd_vanishing)
        self.assertIn('finite projective dimension', report.clauses)
        self.assertTrue(report.conclusion.startswith(
            'projective dimension 2 is finite'))

    def test_vanishing_report_infinite(self):
        report = vanishing_report(residue_field(self.node), window=(1, 3),
                                  e_max=2)
        self.assertIsNone(report.projective_dimension)
        self.assertIsNone(report.finite_pd_vanishing)
        self.assertEqual([w['outcome'] for w in report.windows],
                         ['positive', 'positive'])
        self.assertEqual(len(report.cm_windows), 3)
        self.assertEqual(report.clauses, [])
        self.assertEqual(report.estimates[2].ratios,
                         [Fraction(0), Fraction(1), Fraction(3, 2)])
        data = report.to_data()
        self.assertEqual([e['i'] for e in data['estimates']], [1, 2, 3])

    def test_vanishing_report_depth_zero_dimension_two(self):
        zring = quotient(2, ['x', 'y', 'z'],
                         lambda x, y, z: [z ** 2, z * x, z * y])
        report = vanishing_report(residue_field(zring), window=(1, 3),
                                  e_max=3)
        self.assertIsNone(report.projective_dimension)
        self.assertEqual(report.ring_summary,
                         {'dimension': 2, 'depth_zero': True,
                          'cohen_macaulay': False})
        self.assertEqual([s.length for s in report.estimates[1].samples],
                         [0, 7, 19, 67])
        self.assertEqual([s.length for s in report.estimates[3].samples],
                         [0, 37, 109, 397])
        self.assertEqual([report.estimates[i].verdict for i in (1, 2, 3)],
                         [POSITIVE] * 3)
        self.assertEqual(report.windows,
                         [{'indices': [1, 2, 3], 'outcome': 'positive'}])
        self.assertEqual(report.cm_windows, [])
        self.assertTrue(report.conclusion.startswith(
            'projective dimension is infinite and every window of 3'))


class LimitCheckTest(SimpleTestCase):
    def setUp(self):
        self.E1 = quotient(2, ['x', 'y'], lambda x, y: [x ** 2, x * y])
        self.node = quotient(2, ['x', 'y'], lambda x, y: [x * y])

    def test_nilpotent_holds(self):
        x, y = self.E1.ambient.gens()
        complex_ = chain(self.E1, [0, 1], [y])
        report = nilpotent_limit_check(complex_, 1, e_max=3)
        self.assertEqual([s.length for s in report.estimate.samples],
                         [1, 1, 1, 1])
        self.assertEqual(report.estimate.verdict, DECAYING)
        self.assertTrue(report.holds)

    def test_nilpotent_index_starts_at_one(self):
        x = self.E1.ambient.gens()[0]
        complex_ = chain(self.E1, [0, 1], [x])
        self.assertRaises(HypothesisFails, nilpotent_limit_check, complex_, 0)

    def test_nilpotent_hypothesis_fails(self):
        x, y = self.E1.ambient.gens()
        complex_ = chain(self.E1, [0, 1, 2], [x, y])
        with self.assertRaises(HypothesisFails) as cm:
            nilpotent_limit_check(complex_, 1, 2)
        self.assertIn('non-nilpotent', cm.exception.message)

    def test_nilpotent_needs_monomial_ring(self):
        ring = quotient(3, ['x', 'y'], lambda x, y: [x ** 2 + y ** 2])
        complex_ = FreeComplex([GradedFreeModule(ring, [0])], [])
        self.assertRaises(NotMonomial, nilpotent_limit_check, complex_, 1, 1)

    def test_minimal_prime_holds(self):
        resolution = minimal_free_resolution(residue_field(self.node), 3)
        report = primes_limit_check(resolution, 1, e_max=3)
        self.assertEqual(report.hypothesis, 'phi_2 is nonzero modulo (x)')
        self.assertEqual(report.estimate.verdict, POSITIVE)
        self.assertTrue(report.holds)

    def test_minimal_prime_hypothesis_fails(self):
        x, y = self.node.ambient.gens()
        complex_ = chain(self.node, [0, 1], [x])
        self.assertRaises(HypothesisFails, primes_limit_check, complex_, 1, 2)

    def test_minimal_prime_needs_dimension_one(self):
        plane = quotient(2, ['x', 'y'], lambda x, y: [])
        complex_ = chain(plane, [0, 1], [plane.ambient.gens()[0]])
        self.assertRaises(HypothesisFails, primes_limit_check, complex_, 0, 1)

    def test_inconclusive_estimate_has_no_verdict(self):
        estimate = FBettiEstimate.from_lengths(1, 2, 1, [0, 1, 0, 1])
        self.assertIsNone(_holds(estimate, (POSITIVE,)))
        decaying = FBettiEstimate.from_lengths(1, 2, 1, [1, 1, 1, 1])
        self.assertFalse(_holds(decaying, (POSITIVE,)))
