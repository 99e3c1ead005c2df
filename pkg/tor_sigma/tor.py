"""Tor lengths through G (x) N, the signed sums sigma_i, and the Euler
characteristic identity for complexes of finite-length modules."""
import logging

from base.exceptions import InfiniteLength
from resolutions.complexes import FreeComplex
from resolutions.complexes import PresentedComplex
from resolutions.homology import homology_presentation
from resolutions.minimal import minimal_free_resolution
from resolutions.presentations import ModulePresentation


logger = logging.getLogger(__name__)


class TorTable(object):
    def __init__(self, module, other, lengths):
        self.module = module
        self.other = other
        self.lengths = list(lengths)

    @property
    def i(self):
        return len(self.lengths) - 1

    def __getitem__(self, j):
        return self.lengths[j]

    def to_data(self):
        return [{'j': j, 'length': str(length)}
                for j, length in enumerate(self.lengths)]

    def __repr__(self):
        return '<TorTable %s>' % self.lengths


def _finite_length(presentation, what):
    if not presentation.has_finite_length():
        raise InfiniteLength('%s has dimension %d'
                             % (what, presentation.dimension))
    return presentation.length()


def tor_table(module, other, i, resolution=None):
    """lambda(Tor_j(M, N)) for j <= i, resolving the first argument."""
    module.length()
    if resolution is None or resolution.length < i + 1:
        resolution = minimal_free_resolution(module, i + 1)
    complex_ = resolution.tensor(other)
    lengths = [_finite_length(homology_presentation(complex_, j),
                              'Tor_%d' % j)
               for j in range(i + 1)]
    logger.debug('Tor lengths %s', lengths)
    return TorTable(module, other, lengths)


def sigma(module, other, i, table=None):
    """sum over j <= i of (-1)^(i-j+1) lambda(Tor_j(M, N))."""
    if table is None or table.i < i:
        table = tor_table(module, other, i)
    return sum((-1) ** (i - j + 1) * table[j] for j in range(i + 1))


class EulerCheck(object):
    def __init__(self, lhs, rhs):
        self.lhs = lhs
        self.rhs = rhs

    @property
    def equal(self):
        return self.lhs == self.rhs

    def to_data(self):
        return {'lhs': str(self.lhs), 'rhs': str(self.rhs),
                'equal': self.equal}


def _as_presented(complex_):
    if isinstance(complex_, PresentedComplex):
        return complex_
    ring = complex_.ring
    modules = [ModulePresentation.free(ring, m.twists)
               for m in complex_.modules]
    return PresentedComplex(modules, complex_.maps, check=False)


def euler_check(complex_):
    """Compare sum (-1)^i lambda(M_i) with sum (-1)^i lambda(H_i)."""
    if isinstance(complex_, FreeComplex):
        complex_ = _as_presented(complex_)
    lhs = 0
    rhs = 0
    for j in range(complex_.length + 1):
        sign = (-1) ** j
        lhs += sign * _finite_length(complex_.module(j), 'term %d' % j)
        rhs += sign * _finite_length(homology_presentation(complex_, j),
                                     'H_%d' % j)
    result = EulerCheck(lhs, rhs)
    if not result.equal:
        logger.warning('Euler characteristic mismatch: %d != %d', lhs, rhs)
    return result
