import itertools

import mock
from django.test import SimpleTestCase

from base.exceptions import CapExceeded
from base.exceptions import HypothesisFails
from base.exceptions import InvalidInput
from base.exceptions import SearchExhausted
from core_algebra.polynomials import PolyRing
from resolutions.presentations import ModulePresentation
from resolutions.rings import QuotientRing
from theorems.checks import SYZYGY_OF_H0
from theorems.checks import SYZYGY_OF_RI
from theorems.checks import check_bad_to_good
from theorems.checks import check_big_socle
from theorems.checks import check_dim2_sigma_identity
from theorems.checks import check_dim2_syzygies
from theorems.checks import check_even_index
from theorems.checks import check_syz5_parameter
from theorems.checks import check_syzygy_depth_band
from theorems.checks import guard_failure
from theorems.corpus import FamilySpec
from theorems.corpus import build_instance
from theorems.corpus import e1_ring
from theorems.corpus import node_ring
from theorems.corpus import power_quotient
from theorems.corpus import regular_plane
from theorems.corpus import residue_field
from theorems.corpus import z_ring
from theorems.parameters import ParameterChoice
from theorems.parameters import choose_parameters
from theorems.parameters import find_good_colength_ideal
from theorems.results import CheckResult
from theorems.results import FAILED
from theorems.results import NOT_APPLICABLE
from theorems.results import REFUTED
from theorems.results import SATISFIED
from theorems.results import VACUOUS
from theorems.results import VERIFIED
from theorems.search import search_finite_syzygies
from tor_sigma.tor import sigma


class Fixtures(object):
    def setUp(self):
        self.E1 = e1_ring()
        self.zring = z_ring()
        self.x, self.y = self.E1.ambient.gens()
        self.M = ModulePresentation.from_ideal(self.E1, [self.y])


class CheckResultTest(SimpleTestCase):
    def test_conclusion_needs_satisfied_hypothesis(self):
        self.assertRaises(ValueError, CheckResult, 'dim2', {}, VACUOUS,
                          VERIFIED)
        self.assertRaises(ValueError, CheckResult, 'dim2', {}, FAILED,
                          REFUTED)
        self.assertRaises(ValueError, CheckResult, 'dim2', {}, 'maybe',
                          NOT_APPLICABLE)

    def test_serialization(self):
        result = CheckResult.vacuous('dim2', {'ring': 'R'}, {'i': 3})
        self.assertEqual(result.to_data(),
                         {'check': 'dim2', 'instance': {'ring': 'R'},
                          'hypothesis': VACUOUS,
                          'conclusion': NOT_APPLICABLE,
                          'witness': {'i': 3}})
        self.assertFalse(result.refuted)


class ChooseParametersTest(Fixtures, SimpleTestCase):
    def test_e1_picks_y(self):
        choice = choose_parameters(self.E1)
        self.assertEqual(choice.elements, [self.y])
        self.assertTrue(choice.certified)
        self.assertEqual(choice.degrees, [1])

    def test_x_is_rejected(self):
        choice = ParameterChoice.verify(self.E1, [self.x])
        self.assertFalse(choice.system_of_parameters)
        self.assertEqual(choice.colon_flags, [False])

    def test_z_ring(self):
        x, y, z = self.zring.ambient.gens()
        choice = choose_parameters(self.zring)
        self.assertEqual(choice.elements, [x, y])
        self.assertEqual(choice.colon_flags, [True, True])

    def test_regular_ring(self):
        plane = regular_plane()
        choice = choose_parameters(plane)
        self.assertEqual(len(choice.elements), 2)
        self.assertTrue(choice.certified)

    def test_exhausted(self):
        self.assertRaises(SearchExhausted, choose_parameters, self.E1,
                          tries=1)

    def test_degree_checked(self):
        self.assertRaises(InvalidInput, choose_parameters, self.E1, n=0)


class GoodColengthTest(Fixtures, SimpleTestCase):
    def test_second_syzygy_of_e1_module(self):
        n, power, evidence = find_good_colength_ideal(self.M, 1)
        self.assertLessEqual(n, 4)
        self.assertEqual(n, 2)
        self.assertTrue(evidence['tor_vanishes'])
        self.assertEqual(evidence['sigma'], '1')
        self.assertEqual(evidence['sigma_next'], '1')
        self.assertEqual(evidence['syzygy_length'], '1')
        self.assertTrue(evidence['identity_holds'])
        self.assertEqual(power, self.E1.maximal_ideal ** 2)

    def test_infinite_syzygy(self):
        self.assertRaises(HypothesisFails, find_good_colength_ideal, self.M,
                          2)

    def test_cap(self):
        self.assertRaises(CapExceeded, find_good_colength_ideal, self.M, 1,
                          n_cap=1)

    def test_sigma_mismatch_is_never_returned(self):
        def off_by_one(*args, **kwargs):
            return sigma(*args, **kwargs) + 1

        with mock.patch('theorems.parameters.sigma', side_effect=off_by_one):
            self.assertRaises(CapExceeded, find_good_colength_ideal, self.M,
                              1, n_cap=3)


class BigSocleTest(Fixtures, SimpleTestCase):
    def test_z_ring_residue_field(self):
        result = check_big_socle(self.zring, residue_field(self.zring))
        self.assertEqual(result.hypothesis, SATISFIED)
        self.assertEqual(result.conclusion, VERIFIED)
        rows = result.witness['band'] + result.witness['asserted']
        self.assertEqual([row['i'] for row in rows], [1, 2, 3, 4, 5])
        self.assertFalse(any(row['finite'] for row in rows))

    def test_e1_band_records_finite_second_syzygy(self):
        result = check_big_socle(self.E1, self.M, (1, 4))
        self.assertEqual(result.conclusion, VERIFIED)
        band = result.witness['band']
        self.assertEqual([row['i'] for row in band], [1, 2])
        self.assertEqual(band[1]['length'], '1')
        self.assertEqual([row['i'] for row in result.witness['asserted']],
                         [3, 4])

    def test_nothing_asserted(self):
        result = check_big_socle(self.E1, self.M, (1, 2))
        self.assertEqual(result.hypothesis, SATISFIED)
        self.assertEqual(result.conclusion, NOT_APPLICABLE)

    def test_positive_depth(self):
        node = node_ring()
        self.assertRaises(HypothesisFails, check_big_socle, node,
                          residue_field(node))

    def test_socle_smaller_than_h0(self):
        ambient = PolyRing(2, ['x', 'y'])
        x, y = ambient.gens()
        ring = QuotientRing(ambient, [x ** 3, x * y])
        self.assertRaises(HypothesisFails, check_big_socle, ring,
                          residue_field(ring))


class DepthBandTest(Fixtures, SimpleTestCase):
    def test_low_syzygies_infinite(self):
        result = check_syzygy_depth_band(self.E1, self.M)
        self.assertEqual(result.conclusion, VERIFIED)
        self.assertEqual(len(result.witness['syzygies']), 1)
        result = check_syzygy_depth_band(self.zring,
                                         residue_field(self.zring))
        self.assertEqual(result.conclusion, VERIFIED)


class Dim2SyzygiesTest(Fixtures, SimpleTestCase):
    def test_z_ring(self):
        for module in (residue_field(self.zring),
                       power_quotient(self.zring, 2)):
            result = check_dim2_syzygies(self.zring, module)
            self.assertEqual(result.conclusion, VERIFIED)
            self.assertEqual(result.witness['finite'], [])

    def test_finite_resolution_is_partly_vacuous(self):
        plane = regular_plane()
        x, y = plane.ambient.gens()
        module = ModulePresentation.from_ideal(plane, [x ** 2, y ** 2])
        result = check_dim2_syzygies(plane, module)
        self.assertEqual(result.witness['vacuous'], [3])
        self.assertEqual(result.conclusion, VERIFIED)

    def test_dimension_guard(self):
        self.assertRaises(HypothesisFails, check_dim2_syzygies, self.E1,
                          self.M)

    def test_guard_failure_record(self):
        try:
            check_dim2_syzygies(self.E1, self.M)
        except HypothesisFails as e:
            result = guard_failure('dim2', self.E1, self.M, e)
        self.assertEqual(result.hypothesis, FAILED)
        self.assertEqual(result.witness['category'], 'guard')


class BadToGoodTest(Fixtures, SimpleTestCase):
    def test_h0_syzygy_infinite_is_vacuous(self):
        result = check_bad_to_good(self.E1, self.M, SYZYGY_OF_H0, 4)
        self.assertEqual(result.hypothesis, VACUOUS)
        self.assertFalse(result.witness['hypothesis_syzygy']['finite'])

    def test_quotient_mode_never_refutes(self):
        result = check_bad_to_good(self.E1, self.M, SYZYGY_OF_RI, 3,
                                   self.E1.maximal_ideal ** 2)
        self.assertNotEqual(result.conclusion, REFUTED)

    def test_guards(self):
        self.assertRaises(HypothesisFails, check_bad_to_good, self.E1,
                          self.M, SYZYGY_OF_RI, 2)
        self.assertRaises(HypothesisFails, check_bad_to_good, self.E1,
                          self.M, SYZYGY_OF_H0, 3)
        self.assertRaises(HypothesisFails, check_bad_to_good, self.E1,
                          self.M, SYZYGY_OF_RI, 3, [self.x])
        ambient = PolyRing(2, ['x', 'y', 'z', 'w'])
        x, y, z, w = ambient.gens()
        ring = QuotientRing(ambient, [w ** 2, w * x, w * y, w * z])
        self.assertRaises(HypothesisFails, check_bad_to_good, ring,
                          residue_field(ring), SYZYGY_OF_H0, 4)


class EvenIndexTest(Fixtures, SimpleTestCase):
    def test_e1(self):
        result = check_even_index(self.E1, self.M, self.y)
        self.assertEqual(result.conclusion, VERIFIED)
        self.assertEqual([row['i'] for row in result.witness['syzygies']],
                         [3, 5])
        outside = result.witness['outside_scope']
        self.assertEqual(outside[0]['i'], 2)
        self.assertEqual(outside[0]['length'], '1')

    def test_colon_condition(self):
        self.assertRaises(HypothesisFails, check_even_index, self.E1,
                          self.M, self.x)

    def test_element_must_lie_in_maximal_ideal(self):
        node = node_ring()
        with self.assertRaises(HypothesisFails) as cm:
            check_even_index(node, residue_field(node), node.ambient.one())
        self.assertIn('maximal ideal', cm.exception.message)


class Syz5ParameterTest(Fixtures, SimpleTestCase):
    def test_dimension_one(self):
        result = check_syz5_parameter(self.E1, [self.y])
        self.assertEqual(result.conclusion, VERIFIED)
        self.assertFalse(result.witness['syzygy']['finite'])

    def test_dimension_two(self):
        choice = choose_parameters(self.zring)
        result = check_syz5_parameter(self.zring, choice)
        self.assertEqual(result.conclusion, VERIFIED)
        self.assertTrue(result.witness['reduced_cohen_macaulay'])
        self.assertEqual(result.witness['parameters']['colon_flags'],
                         [True, True])

    def test_not_parameters(self):
        self.assertRaises(HypothesisFails, check_syz5_parameter, self.E1,
                          [self.x])


class Dim2SigmaTest(Fixtures, SimpleTestCase):
    def test_vacuous(self):
        result = check_dim2_sigma_identity(self.zring,
                                           residue_field(self.zring), 2)
        self.assertEqual(result.hypothesis, VACUOUS)

    def test_dimension_guard(self):
        self.assertRaises(HypothesisFails, check_dim2_sigma_identity,
                          self.E1, self.M, 1)


class CorpusTest(SimpleTestCase):
    def test_family(self):
        family = FamilySpec(nvars=2, max_degree=2, max_generators=2)
        rings = list(family.rings())
        self.assertEqual(len(rings), 2)
        self.assertIn(((2, 0), (1, 1)), [e for e, _ in rings])
        for _, ring in rings:
            self.assertEqual(ring.dimension, 1)
            self.assertTrue(ring.depth_zero)

    def test_limits(self):
        self.assertRaises(InvalidInput, FamilySpec, nvars=4)
        self.assertRaises(InvalidInput, FamilySpec, max_degree=5)
        self.assertEqual(list(FamilySpec(limit=0).instances()), [])

    def test_build_instance(self):
        data = {'p': 2, 'variables': ['x', 'y'],
                'generators': [[2, 0], [1, 1]], 'module': 'm2'}
        ring, module = build_instance(data)
        self.assertEqual(ring, e1_ring())
        self.assertEqual(module.length(), 3)
        data['module'] = 'parameter'
        self.assertEqual(build_instance(data)[1].length(), 2)
        data['module'] = 'box'
        self.assertRaises(InvalidInput, build_instance, data)


class SearchTest(SimpleTestCase):
    def setUp(self):
        self.family = FamilySpec(nvars=2, max_degree=2, max_generators=2,
                                 modules=('parameter',))

    def test_finite_second_syzygies_flagged(self):
        catalog = search_finite_syzygies(self.family, 3, workers=1)
        self.assertEqual(len(catalog), 2)
        for entry in catalog.entries:
            self.assertEqual(entry['dimension'], 1)
            self.assertIsNone(entry['projective_dimension'])
            self.assertEqual(entry['flags'], [{'i': 2, 'length': '1'}])
        generators = [e['instance']['generators'] for e in catalog.entries]
        self.assertIn([[2, 0], [1, 1]], generators)

    def test_dimension_two_family_has_no_finite_third_syzygy(self):
        family = FamilySpec(nvars=3, max_degree=2, max_generators=3,
                            dimension=2, depth_zero=False,
                            modules=('k', 'm2'))
        catalog = search_finite_syzygies(family, 3, workers=1)
        self.assertGreaterEqual(len(catalog), 20)
        self.assertEqual(catalog.errors, [])
        self.assertEqual(catalog.flagged, [])
        for entry in catalog.entries:
            self.assertEqual(entry['dimension'], 2)
            third = entry['syzygies'][2]
            self.assertEqual(third['i'], 3)
            self.assertFalse(third['finite'] and third['length'] != '0')
        generators = [e['instance']['generators'] for e in catalog.entries]
        self.assertIn([[1, 0, 1], [0, 1, 1], [0, 0, 2]], generators)

    def test_deterministic(self):
        first = search_finite_syzygies(self.family, 2, workers=1)
        second = search_finite_syzygies(self.family, 2, workers=1)
        self.assertEqual(first.to_data(), second.to_data())

    def test_empty_family(self):
        catalog = search_finite_syzygies(FamilySpec(limit=0), 3)
        self.assertEqual(catalog.to_data(), [])

    @mock.patch('theorems.search.mp.get_context')
    def test_worker_pool(self, get_context):
        pool = get_context.return_value.Pool.return_value.__enter__
        pool.return_value.starmap.side_effect = (
            lambda function, args: list(itertools.starmap(function, args)))
        catalog = search_finite_syzygies(self.family, 2, workers=2)
        get_context.return_value.Pool.assert_called_once_with(processes=2)
        self.assertEqual(catalog.to_data(),
                         search_finite_syzygies(self.family, 2,
                                                workers=1).to_data())

    @mock.patch('theorems.search.build_instance')
    def test_engine_errors_recorded(self, build):
        build.side_effect = SearchExhausted('nothing found')
        catalog = search_finite_syzygies(self.family, 2)
        self.assertEqual(len(catalog.errors), 2)
        self.assertEqual(catalog.errors[0]['error']['error'],
                         'SearchExhausted')

    @mock.patch('theorems.search.build_instance')
    def test_other_errors_reraised(self, build):
        build.side_effect = RuntimeError('boom')
        self.assertRaises(RuntimeError, search_finite_syzygies, self.family,
                          2)
