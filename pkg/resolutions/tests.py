from django.test import SimpleTestCase
from django.test.utils import override_settings

from base.exceptions import CapExceeded
from base.exceptions import ComposesNonzero
from base.exceptions import InvalidInput
from base.exceptions import NonHomogeneous
from core_algebra.polynomials import PolyRing
from resolutions.complexes import FreeComplex
from resolutions.homology import homology_presentation
from resolutions.minimal import minimal_free_resolution
from resolutions.minimal import prune_units
from resolutions.minimal import syzygy_matrix
from resolutions.minimal import syzygy_length
from resolutions.minimal import syzygy_module
from resolutions.minimal import syzygy_profile
from resolutions.modules import GradedFreeModule
from resolutions.modules import GradedMatrix
from resolutions.oracle import homology_length_oracle
from resolutions.oracle import rank_mod_p
from resolutions.presentations import ModulePresentation
from resolutions.rings import QuotientRing
from resolutions.rings import depth
from resolutions.rings import is_cohen_macaulay


def quotient(p, variables, build):
    ambient = PolyRing(p, variables)
    return QuotientRing(ambient, build(*ambient.gens()))


def residue_field(ring):
    return ModulePresentation.from_ideal(ring, ring.ambient.gens())


def frobenius_of(complex_, e):
    """Raise every entry to the p^e power and scale the twists."""
    q = complex_.ring.characteristic ** e
    modules = [m.shifted(q) for m in complex_.modules]
    maps = [phi.map_entries(lambda f: f.frobenius(e), modules[j + 1],
                            modules[j])
            for j, phi in enumerate(complex_.maps)]
    return FreeComplex(modules, maps)


class RingFixtures(object):
    def setUp(self):
        self.E1 = quotient(2, ['x', 'y'], lambda x, y: [x ** 2, x * y])
        self.node = quotient(2, ['x', 'y'], lambda x, y: [x * y])
        self.plane = quotient(2, ['x', 'y'], lambda x, y: [])
        self.zring = quotient(2, ['x', 'y', 'z'],
                              lambda x, y, z: [z ** 2, z * x, z * y])


class QuotientRingTest(RingFixtures, SimpleTestCase):
    def test_dimension_and_depth_flags(self):
        self.assertEqual(self.E1.dimension, 1)
        self.assertTrue(self.E1.depth_zero)
        self.assertEqual(self.node.dimension, 1)
        self.assertFalse(self.node.depth_zero)
        self.assertEqual(self.zring.dimension, 2)
        self.assertTrue(self.zring.depth_zero)
        self.assertFalse(self.plane.depth_zero)

    def test_h0_top_degree(self):
        self.assertEqual(self.E1.h0_top_degree, 1)
        self.assertEqual(self.zring.h0_top_degree, 1)
        self.assertEqual(self.plane.h0_top_degree, -1)
        longer = quotient(2, ['x', 'y'], lambda x, y: [x ** 3, x * y])
        self.assertEqual(longer.h0_top_degree, 2)

    def test_depth(self):
        self.assertEqual(depth(self.plane), 2)
        self.assertEqual(depth(self.node), 1)
        self.assertEqual(depth(self.E1), 0)
        self.assertEqual(depth(self.zring), 0)
        self.assertTrue(is_cohen_macaulay(self.node))
        self.assertFalse(is_cohen_macaulay(self.zring))

    def test_reduce(self):
        x, y = self.E1.ambient.gens()
        self.assertTrue(self.E1.is_zero(x ** 2 + x * y))
        self.assertEqual(self.E1.reduce(x ** 2 + y ** 2), y ** 2)

    def test_unit_ideal_rejected(self):
        ambient = PolyRing(2, ['x'])
        self.assertRaises(InvalidInput, QuotientRing, ambient,
                          [ambient.one()])


class GradedMatrixTest(RingFixtures, SimpleTestCase):
    def test_entries_reduced_and_checked(self):
        x, y = self.E1.ambient.gens()
        source = GradedFreeModule(self.E1, [2])
        target = GradedFreeModule(self.E1, [0])
        phi = GradedMatrix(source, target, [[x ** 2 + y ** 2]])
        self.assertEqual(phi.entry(0, 0), y ** 2)
        self.assertRaises(NonHomogeneous, GradedMatrix, source, target, [[y]])

    def test_compose_and_kronecker(self):
        x, y = self.node.ambient.gens()
        one = GradedFreeModule(self.node, [0])
        shifted = GradedFreeModule(self.node, [1])
        a = GradedMatrix(shifted, one, [[x]])
        b = GradedMatrix(GradedFreeModule(self.node, [2]), shifted, [[y]])
        self.assertTrue(a.compose(b).is_zero())
        product = a.kronecker(GradedMatrix(shifted, one, [[y]]))
        self.assertEqual(product.shape, (1, 1))
        self.assertTrue(product.is_zero())
        self.assertEqual(product.source.twists, (2,))

    def test_prune_units(self):
        x, y = self.plane.ambient.gens()
        matrix = GradedMatrix(GradedFreeModule(self.plane, [0, 1]),
                              GradedFreeModule(self.plane, [0, 0]),
                              [[1, x], [0, y]])
        pruned = prune_units(matrix)
        self.assertEqual(pruned.shape, (1, 1))
        self.assertEqual(pruned.entry(0, 0), y)
        self.assertTrue(pruned.is_minimal())


class SyzygyMatrixTest(RingFixtures, SimpleTestCase):
    def test_annihilator_of_y(self):
        x, y = self.E1.ambient.gens()
        phi = GradedMatrix(GradedFreeModule(self.E1, [1]),
                           GradedFreeModule(self.E1, [0]), [[y]])
        psi = syzygy_matrix(phi)
        self.assertEqual(psi.entries, [[x]])
        self.assertEqual(psi.source.twists, (2,))

    def test_identity_has_zero_kernel(self):
        module = GradedFreeModule(self.E1, [0, 1])
        psi = syzygy_matrix(GradedMatrix.identity(module))
        self.assertEqual(psi.source.rank, 0)
        self.assertTrue(psi.is_zero())

    def test_row_over_node(self):
        x, y = self.node.ambient.gens()
        phi = GradedMatrix(GradedFreeModule(self.node, [1, 1]),
                           GradedFreeModule(self.node, [0]), [[x, y]])
        psi = syzygy_matrix(phi)
        columns = sorted((tuple(str(e) for e in psi.column(i))
                          for i in range(psi.source.rank)))
        self.assertEqual(columns, [('0', 'x'), ('y', '0')])
        self.assertTrue(phi.compose(psi).is_zero())


class MinimalResolutionTest(RingFixtures, SimpleTestCase):
    def test_residue_field_over_node_is_periodic(self):
        resolution = minimal_free_resolution(residue_field(self.node), 4)
        self.assertEqual(resolution.betti_numbers(), [1, 2, 2, 2, 2])
        self.assertTrue(resolution.is_minimal())
        self.assertIsNone(resolution.projective_dimension())

    def test_free_module(self):
        resolution = minimal_free_resolution(
            ModulePresentation.free(self.E1, [0]), 3)
        self.assertEqual(resolution.betti_numbers(), [1, 0, 0, 0])
        self.assertEqual(resolution.projective_dimension(), 0)

    def test_koszul_complex(self):
        x, y = self.plane.ambient.gens()
        module = ModulePresentation.from_ideal(self.plane, [x ** 2, y ** 3])
        resolution = minimal_free_resolution(module, 3)
        self.assertEqual(resolution.betti_numbers(), [1, 2, 1, 0])
        self.assertEqual(resolution.projective_dimension(), 2)
        self.assertEqual(sorted(resolution.module(1).twists), [2, 3])
        self.assertEqual(resolution.module(2).twists, (5,))

    def test_betti_numbers_over_z_ring(self):
        resolution = minimal_free_resolution(residue_field(self.zring), 4)
        self.assertEqual(resolution.betti_numbers(), [1, 3, 6, 13, 28])
        self.assertTrue(resolution.is_minimal())

    def test_non_minimal_presentation_is_minimized(self):
        x, y = self.E1.ambient.gens()
        module = ModulePresentation.from_ideal(self.E1, [y, x * y, y ** 2])
        resolution = minimal_free_resolution(module, 2)
        self.assertEqual(resolution.betti_numbers(), [1, 1, 1])
        self.assertEqual(resolution.phi(1).entries, [[y]])

    def test_exactness(self):
        x, y = self.E1.ambient.gens()
        module = ModulePresentation.from_ideal(self.E1, [y])
        resolution = minimal_free_resolution(module, 4)
        for j in range(1, 4):
            self.assertTrue(homology_presentation(resolution, j).is_zero())
        h0 = homology_presentation(resolution, 0)
        self.assertTrue(h0.same_submodule(
            ModulePresentation(self.E1, resolution.phi(1))))
        self.assertEqual(h0.length(), 2)

    @override_settings(FROBSYZ_STEP_CAP=3)
    def test_step_cap(self):
        self.assertRaises(CapExceeded, minimal_free_resolution,
                          residue_field(self.node), 4)


class SyzygyModuleTest(RingFixtures, SimpleTestCase):
    def setUp(self):
        super(SyzygyModuleTest, self).setUp()
        x, y = self.E1.ambient.gens()
        self.module = ModulePresentation.from_ideal(self.E1, [y])
        self.resolution = minimal_free_resolution(self.module, 4)

    def test_second_syzygy_is_residue_field(self):
        syz2 = syzygy_module(self.module, 2, resolution=self.resolution)
        self.assertEqual(syz2.dimension, 0)
        self.assertEqual(syz2.length(), 1)

    def test_first_and_third_syzygies_are_infinite(self):
        for i in (1, 3):
            syz = syzygy_module(self.module, i, resolution=self.resolution)
            self.assertEqual(syz.dimension, 1)
            self.assertIsNone(syz.length_if_finite())

    def test_computes_its_own_resolution(self):
        self.assertEqual(syzygy_module(self.module, 2).length(), 1)

    def test_profiles_from_the_resolution(self):
        profile = syzygy_profile(self.resolution, 2)
        self.assertTrue(profile.finite)
        self.assertEqual(profile.length, 1)
        for i in (1, 3):
            self.assertFalse(syzygy_profile(self.resolution, i).finite)
        self.assertEqual(profile.to_data(),
                         {'i': 2, 'finite': True, 'length': '1',
                          'dimension': 0})

    def test_profile_index_checked(self):
        self.assertRaises(ValueError, syzygy_profile, self.resolution, 0)
        self.assertRaises(ValueError, syzygy_profile, self.resolution, 5)

    def test_length_through_presentation(self):
        profile = syzygy_length(self.module, 2)
        self.assertEqual((profile.dimension, profile.length), (0, 1))
        profile = syzygy_length(self.module, 3, self.resolution)
        self.assertEqual(profile.dimension, 1)
        self.assertIsNone(profile.length)

    def test_profile_of_finite_resolution(self):
        x, y = self.plane.ambient.gens()
        box = ModulePresentation.from_ideal(self.plane, [x ** 2, y ** 3])
        profile = syzygy_profile(minimal_free_resolution(box, 3), 3)
        self.assertTrue(profile.is_zero)


class PresentationTest(RingFixtures, SimpleTestCase):
    def test_lengths(self):
        x, y = self.plane.ambient.gens()
        box = ModulePresentation.from_ideal(self.plane, [x ** 2, y ** 3])
        self.assertEqual(box.length(), 6)
        k = residue_field(self.plane)
        self.assertEqual(box.direct_sum(k).length(), 7)
        self.assertEqual(box.tensor_presentation(k).length(), 1)
        self.assertEqual(box.tensor_presentation(box).length(), 6)

    def test_ideal_module(self):
        x, y = self.E1.ambient.gens()
        h0 = ModulePresentation.ideal_module(self.E1, [x])
        self.assertEqual(h0.length(), 1)
        self.assertTrue(h0.annihilated_by(self.E1.maximal_ideal))
        self.assertTrue(ModulePresentation.ideal_module(
            self.E1, [x ** 2]).is_zero())
        principal = ModulePresentation.ideal_module(self.E1, [y])
        self.assertEqual(principal.dimension, 1)

    def test_hilbert_function(self):
        x, y = self.E1.ambient.gens()
        module = ModulePresentation.from_ideal(self.E1, [y])
        self.assertEqual([module.hilbert_function(d) for d in range(4)],
                         [1, 1, 0, 0])

    def test_modulo_ideal(self):
        x, y = self.E1.ambient.gens()
        module = ModulePresentation.from_ideal(self.E1, [y])
        self.assertEqual(module.modulo_ideal([x]).length(), 1)
        self.assertIs(module.modulo_ideal([x ** 2]), module)
        a, b = self.plane.ambient.gens()
        box = ModulePresentation.from_ideal(self.plane, [a ** 2, b ** 3])
        self.assertEqual(box.modulo_ideal([a]).length(), 3)
        self.assertEqual(box.direct_sum(box).modulo_ideal([a]).length(), 6)


class HomologyTest(RingFixtures, SimpleTestCase):
    def test_zero_map(self):
        ring = quotient(2, ['x', 'y'], lambda x, y: [x ** 2, y ** 2])
        one = GradedFreeModule(ring, [0])
        complex_ = FreeComplex([one, one], [GradedMatrix.zero(one, one)])
        self.assertEqual(homology_presentation(complex_, 0).length(), 4)
        self.assertEqual(homology_presentation(complex_, 1).length(), 4)

    def test_composition_checked(self):
        x, y = self.plane.ambient.gens()
        modules = [GradedFreeModule(self.plane, [0]),
                   GradedFreeModule(self.plane, [1]),
                   GradedFreeModule(self.plane, [2])]
        phi1 = GradedMatrix(modules[1], modules[0], [[x]])
        phi2 = GradedMatrix(modules[2], modules[1], [[x]])
        self.assertRaises(ComposesNonzero, FreeComplex, modules,
                          [phi1, phi2])

    def test_frobenius_of_node_resolution(self):
        resolution = minimal_free_resolution(residue_field(self.node), 3)
        twisted = frobenius_of(resolution, 1)
        self.assertEqual(homology_presentation(twisted, 1).length(), 2)
        self.assertEqual(homology_length_oracle(twisted, 1), 2)

    def test_oracle_agrees_with_presentations(self):
        complexes = [
            minimal_free_resolution(residue_field(self.node), 3),
            frobenius_of(minimal_free_resolution(residue_field(self.node),
                                                 3), 2),
            frobenius_of(minimal_free_resolution(
                ModulePresentation.from_ideal(self.E1,
                                              [self.E1.ambient.gen('y')]),
                3), 1),
        ]
        for complex_ in complexes:
            for i in range(0, 3):
                presented = homology_presentation(complex_, i)
                if presented.has_finite_length():
                    self.assertEqual(presented.length(),
                                     homology_length_oracle(complex_, i))

    def test_tensor_complex(self):
        x, y = self.E1.ambient.gens()
        module = ModulePresentation.from_ideal(self.E1, [y])
        resolution = minimal_free_resolution(module, 2)
        tensored = resolution.tensor(residue_field(self.E1))
        # Tor_j(R/(y), k) has dimension beta_j
        for j in range(2):
            self.assertEqual(homology_presentation(tensored, j).length(),
                             resolution.betti_numbers()[j])


class RankTest(SimpleTestCase):
    def test_rank_mod_p(self):
        self.assertEqual(rank_mod_p([[1, 1], [1, 1]], 2), 1)
        self.assertEqual(rank_mod_p([[1, 2], [2, 1]], 3), 1)
        self.assertEqual(rank_mod_p([[1, 2], [2, 1]], 5), 2)
        self.assertEqual(rank_mod_p([], 2), 0)
