"""Built-in rings and modules, and the enumerable monomial family searched
for finite-length syzygies.

Instances travel to worker processes as plain data: the characteristic,
the variable names and exponent vectors of monomial generators.
"""
import itertools

from base.exceptions import InvalidInput
from core_algebra.polynomials import PolyRing
from groebner.hilbert import krull_dimension
from groebner.ideals import HomogeneousIdeal
from groebner.ideals import monomials_of_degree
from resolutions.presentations import ModulePresentation
from resolutions.rings import QuotientRing


def monomial_ring(p, variables, exponents):
    ambient = PolyRing(p, variables)
    return QuotientRing(ambient, [ambient.monomial(e) for e in exponents])


def e1_ring():
    """F_2[x,y]/(x^2, xy): dimension 1, depth 0, H^0 = (x)."""
    return monomial_ring(2, ['x', 'y'], [(2, 0), (1, 1)])


def node_ring():
    """F_2[x,y]/(xy): dimension 1, Cohen-Macaulay."""
    return monomial_ring(2, ['x', 'y'], [(1, 1)])


def z_ring():
    """F_2[x,y,z]/(z^2, zx, zy): dimension 2, depth 0, H^0 = (z)."""
    return monomial_ring(2, ['x', 'y', 'z'], [(0, 0, 2), (1, 0, 1),
                                                (0, 1, 1)])


def regular_plane(p=2):
    return QuotientRing(PolyRing(p, ['x', 'y']))


BUILTIN_RINGS = {
    'E1': e1_ring,
    'node': node_ring,
    'zring': z_ring,
    'plane': regular_plane,
}


def residue_field(ring):
    return ModulePresentation.from_ideal(ring, ring.ambient.gens())


def power_quotient(ring, n):
    """R / m^n."""
    return ModulePresentation.from_ideal(
        ring, (ring.maximal_ideal ** n).generators)


def _is_antichain(exponents):
    for a, b in itertools.permutations(exponents, 2):
        if all(x <= y for x, y in zip(a, b)):
            return False
    return True


class FamilySpec(object):
    """Monomial quotients of F_p[x_1..x_n] by antichains of monomials.

    ``dimension`` keeps only rings of that Krull dimension and
    ``depth_zero`` only rings whose maximal ideal is associated. At most
    ``limit`` rings are produced, in a fixed order.
    """
    VARIABLES = ('x', 'y', 'z')

    def __init__(self, nvars=2, min_degree=2, max_degree=2,
                 max_generators=2, dimension=None, depth_zero=True,
                 modules=('k',), limit=None, p=2):
        if not 1 <= nvars <= 3:
            raise InvalidInput('the family has 1 to 3 variables', nvars=nvars)
        if max_degree > 4:
            raise InvalidInput('generator degree is at most 4',
                               max_degree=max_degree)
        self.nvars = nvars
        self.min_degree = min_degree
        self.max_degree = max_degree
        self.max_generators = max_generators
        self.dimension = dimension
        self.depth_zero = depth_zero
        self.modules = tuple(modules)
        self.limit = limit
        self.p = p

    @property
    def variables(self):
        return list(self.VARIABLES[:self.nvars])

    def to_data(self):
        return {'nvars': self.nvars, 'min_degree': self.min_degree,
                'max_degree': self.max_degree,
                'max_generators': self.max_generators,
                'dimension': self.dimension, 'depth_zero': self.depth_zero,
                'modules': list(self.modules), 'limit': self.limit,
                'p': self.p}

    def _generator_sets(self):
        monomials = []
        for degree in range(self.min_degree, self.max_degree + 1):
            monomials.extend(sorted(monomials_of_degree(self.nvars, degree),
                                    reverse=True))
        for size in range(1, self.max_generators + 1):
            for subset in itertools.combinations(monomials, size):
                if _is_antichain(subset):
                    yield subset

    def rings(self):
        """(exponents, ring) pairs passing the filters."""
        ambient = PolyRing(self.p, self.variables)
        produced = 0
        for exponents in self._generator_sets():
            if self.limit is not None and produced >= self.limit:
                return
            ideal = HomogeneousIdeal(ambient,
                                     [ambient.monomial(e) for e in exponents])
            dimension = krull_dimension(ideal)
            if dimension < 1:
                continue
            if self.dimension is not None and dimension != self.dimension:
                continue
            ring = QuotientRing(ambient, ideal)
            if self.depth_zero and not ring.depth_zero:
                continue
            produced += 1
            yield exponents, ring

    def instances(self):
        """Picklable instance descriptions, one per ring and module kind."""
        for exponents, _ in self.rings():
            for kind in self.modules:
                yield {'p': self.p, 'variables': self.variables,
                       'generators': [list(e) for e in exponents],
                       'module': kind}


def build_instance(data):
    """Rebuild the ring and module named by an instance description."""
    ring = monomial_ring(data['p'], data['variables'],
                         [tuple(e) for e in data['generators']])
    kind = data['module']
    if kind == 'k':
        return ring, residue_field(ring)
    if kind.startswith('m') and kind[1:].isdigit():
        return ring, power_quotient(ring, int(kind[1:]))
    if kind == 'parameter':
        from theorems.parameters import choose_parameters
        choice = choose_parameters(ring)
        return ring, ModulePresentation.from_ideal(ring, choice.elements)
    raise InvalidInput('unknown module kind %r' % kind, module=kind)
