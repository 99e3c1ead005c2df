"""Kernels, minimal generators and minimal graded free resolutions."""
import logging

from django.conf import settings

from base.exceptions import CapExceeded
from groebner.basis import BuchbergerRun
from groebner.syzygies import ideal_module_generators
from groebner.syzygies import syzygy_vectors
from groebner.vectors import vector_degree
from resolutions.complexes import FreeComplex
from resolutions.modules import GradedFreeModule
from resolutions.modules import GradedMatrix
from resolutions.presentations import ModulePresentation


logger = logging.getLogger(__name__)


def _kernel_vectors(matrix):
    ring = matrix.ring
    return syzygy_vectors(ring.ambient, matrix.column_vectors(),
                          list(matrix.target.twists),
                          list(matrix.source.twists), ring.gb)


def syzygy_matrix(matrix):
    """A map whose image is the kernel of ``matrix`` (not minimized)."""
    vectors = _kernel_vectors(matrix)
    twists = list(matrix.source.twists)
    source = GradedFreeModule(matrix.ring,
                              [vector_degree(v, twists) for v in vectors])
    return GradedMatrix.from_columns(source, matrix.source, vectors)


def minimal_columns(ring, twists, vectors):
    """A minimal homogeneous generating set of span(vectors) in R^r.

    Vectors are taken in degree order and kept unless they already lie in
    the span of the kept ones plus I S^r, which only needs a Groebner basis
    completed up to their degree.
    """
    twists = list(twists)
    run = BuchbergerRun(ring.ambient, twists)
    for vector in ideal_module_generators(ring.ideal.generators, len(twists)):
        run.add(vector)
    chosen = []
    ordered = sorted((v for v in vectors if v),
                     key=lambda v: vector_degree(v, twists))
    for vector in ordered:
        degree = vector_degree(vector, twists)
        run.complete(max_degree=degree)
        if run.add(vector):
            chosen.append(vector)
    return chosen


def prune_units(matrix):
    """Remove constant entries by row and column operations.

    A unit in row j, column i means generator j of the target is redundant;
    clearing the rest of row j with column i and dropping both leaves a
    presentation of the same module.
    """
    ring = matrix.ring
    ambient = ring.ambient
    entries = [list(row) for row in matrix.entries]
    source = list(matrix.source.twists)
    target = list(matrix.target.twists)
    field = ambient.field
    while True:
        unit = None
        for j, row in enumerate(entries):
            for i, entry in enumerate(row):
                if entry and entry.is_constant():
                    unit = (j, i)
                    break
            if unit:
                break
        if unit is None:
            break
        j, i = unit
        inverse = field.inverse(entries[j][i].terms[ambient.one_monomial])
        for k in range(len(source)):
            factor = entries[j][k]
            if k == i or not factor:
                continue
            factor = factor.scale(inverse)
            for r in range(len(target)):
                if entries[r][i]:
                    entries[r][k] = ring.reduce(entries[r][k] -
                                                factor * entries[r][i])
        del entries[j]
        del target[j]
        for row in entries:
            del row[i]
        del source[i]
    return GradedMatrix(GradedFreeModule(ring, source),
                        GradedFreeModule(ring, target), entries)


def minimize_presentation(matrix):
    """A presentation of the same cokernel with no constant entries and
    minimally many relations."""
    pruned = prune_units(matrix)
    vectors = minimal_columns(pruned.ring, pruned.target.twists,
                              pruned.column_vectors())
    twists = list(pruned.target.twists)
    source = GradedFreeModule(pruned.ring,
                              [vector_degree(v, twists) for v in vectors])
    return GradedMatrix.from_columns(source, pruned.target, vectors)


def minimal_free_resolution(module, steps):
    """G_0 <- G_1 <- ... <- G_steps, minimal, resolving ``module``."""
    cap = getattr(settings, 'FROBSYZ_STEP_CAP', 12)
    if steps < 0:
        raise ValueError('steps must be non-negative')
    if steps > cap:
        raise CapExceeded('%d resolution steps requested, the cap is %d' %
                          (steps, cap), steps=steps, cap=cap)
    ring = module.ring
    current = minimize_presentation(module.matrix)
    modules = [current.target]
    maps = []
    for step in range(1, steps + 1):
        if step > 1:
            vectors = minimal_columns(ring, current.source.twists,
                                      _kernel_vectors(current))
            twists = list(current.source.twists)
            source = GradedFreeModule(
                ring, [vector_degree(v, twists) for v in vectors])
            current = GradedMatrix.from_columns(source, current.source,
                                                vectors)
        modules.append(current.source)
        maps.append(current)
        logger.debug('resolution step %d: rank %d', step, current.source.rank)
    return FreeComplex(modules, maps)


def syzygy_module(module, i, resolution=None):
    """Syz_i of ``module``, presented as the cokernel of phi_(i+1)."""
    if i < 1:
        raise ValueError('syzygy index must be at least 1')
    if resolution is None or resolution.length < i + 1:
        resolution = minimal_free_resolution(module, i + 1)
    return ModulePresentation(module.ring, resolution.phi(i + 1))


class SyzygyProfile(object):
    """Finiteness of Syz_i = im(phi_i) inside G_(i-1)."""

    def __init__(self, i, finite, length=None, dimension=None):
        self.i = i
        self.finite = finite
        self.length = length
        self.dimension = dimension

    @property
    def is_zero(self):
        return self.length == 0

    def to_data(self):
        return {'i': self.i, 'finite': self.finite,
                'length': None if self.length is None else str(self.length),
                'dimension': self.dimension}

    def __repr__(self):
        return '<SyzygyProfile i=%d finite=%s length=%s>' % (
            self.i, self.finite, self.length)


def _free_hilbert_function(ring, twists, degree):
    return sum(ring.hilbert_function(degree - t) for t in twists
               if degree >= t)


def syzygy_profile(resolution, i):
    """Syz_i has finite length exactly when it lies in H^0_m(G_(i-1)), that
    is when every entry of phi_i lies in H^0_m(R); its length is then read
    off Hilbert functions up to the top degree of H^0_m(R)."""
    if i < 1 or i > resolution.length:
        raise ValueError('Syz_%d needs phi_%d of the resolution' % (i, i))
    ring = resolution.ring
    phi = resolution.phi(i)
    if phi.is_zero():
        return SyzygyProfile(i, True, 0, -1)
    h0 = ring.h0_ideal
    finite = all(h0.contains(f) for row in phi.entries for f in row if f)
    if not finite:
        return SyzygyProfile(i, False)
    twists = phi.target.twists
    image = ModulePresentation(ring, phi)
    length = 0
    for degree in range(min(twists), max(twists) + ring.h0_top_degree + 1):
        length += (_free_hilbert_function(ring, twists, degree) -
                   image.hilbert_function(degree))
    return SyzygyProfile(i, True, length, 0 if length else -1)


def syzygy_length(module, i, resolution=None):
    """Dimension and length of Syz_i from its presentation coker phi_(i+1)."""
    presentation = syzygy_module(module, i, resolution)
    dimension = presentation.dimension
    length = presentation.length() if dimension <= 0 else None
    return SyzygyProfile(i, dimension <= 0, length, dimension)
