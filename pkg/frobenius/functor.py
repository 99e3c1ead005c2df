"""The Frobenius functor on ideals, matrices and free complexes."""
import logging

from django.conf import settings

from base.exceptions import CompositionBroken
from base.exceptions import InfiniteLength
from groebner.ideals import HomogeneousIdeal
from resolutions.complexes import FreeComplex
from resolutions.homology import homology_presentation
from resolutions.minimal import minimal_free_resolution


logger = logging.getLogger(__name__)


class FrobeniusLevel(object):
    """The level e of the iterated Frobenius, with q = p^e."""
    __slots__ = ('p', 'e')

    def __init__(self, p, e):
        if e < 0:
            raise ValueError('Frobenius level must be non-negative')
        self.p = p
        self.e = e

    @property
    def q(self):
        return self.p ** self.e

    def __repr__(self):
        return '<FrobeniusLevel e=%d q=%d>' % (self.e, self.q)


def default_e_max(p):
    defaults = getattr(settings, 'FROBSYZ_EMAX_DEFAULTS', {2: 4, 3: 3})
    return defaults.get(p, getattr(settings, 'FROBSYZ_EMAX_FALLBACK', 2))


def bracket_power_ideal(ideal, e):
    """I^[q], generated by the q-th powers of the given generators."""
    return HomogeneousIdeal(ideal.ring,
                            [g.frobenius(e) for g in ideal.generators])


def frobenius_matrix(matrix, e, source, target):
    return matrix.map_entries(lambda f: f.frobenius(e), source, target)


def frobenius_complex(complex_, e):
    """F^e(G): entries raised to the q-th power, twists multiplied by q."""
    if e == 0:
        return complex_
    q = FrobeniusLevel(complex_.ring.characteristic, e).q
    modules = [module.shifted(q) for module in complex_.modules]
    maps = [frobenius_matrix(phi, e, modules[j], modules[j - 1])
            for j, phi in enumerate(complex_.maps, 1)]
    return FreeComplex(modules, maps, error=CompositionBroken)


class FrobeniusHomologyTable(object):
    """lambda(H_i(F^e(G))) for 0 <= i <= i_max and 0 <= e <= e_max."""

    def __init__(self, i_max, e_max, lengths, resolution=None):
        self.i_max = i_max
        self.e_max = e_max
        self.lengths = lengths
        self.resolution = resolution

    def __getitem__(self, key):
        return self.lengths[key]

    def row(self, i):
        return [self.lengths[(i, e)] for e in range(self.e_max + 1)]

    def to_data(self):
        return [{'i': i, 'lengths': [str(v) for v in self.row(i)]}
                for i in range(self.i_max + 1)]


def homology_length(complex_, i):
    presentation = homology_presentation(complex_, i)
    if not presentation.has_finite_length():
        raise InfiniteLength('H_%d of the Frobenius complex has dimension %d'
                             % (i, presentation.dimension), index=i)
    return presentation.length()


def frobenius_homology_lengths(module, i_max, e_max=None, resolution=None):
    if e_max is None:
        e_max = default_e_max(module.ring.characteristic)
    module.length()
    if resolution is None or resolution.length < i_max + 1:
        resolution = minimal_free_resolution(module, i_max + 1)
    lengths = {}
    for e in range(e_max + 1):
        twisted = frobenius_complex(resolution, e)
        for i in range(i_max + 1):
            lengths[(i, e)] = homology_length(twisted, i)
        logger.debug('Frobenius level %d: lengths %s', e,
                     [lengths[(i, e)] for i in range(i_max + 1)])
    return FrobeniusHomologyTable(i_max, e_max, lengths, resolution)
