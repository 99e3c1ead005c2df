"""Exact homology of free complexes and complexes of presented modules.

H = Z / (Z meet Rel) is presented on the generators of Z: a relation is a
coefficient vector u with sum u_k z_k in span(Rel) + I F, i.e. the first
coordinates of the kernel of [Z | Rel].
"""
import logging

from base.exceptions import ComposesNonzero
from groebner.syzygies import kernel_lifts
from groebner.syzygies import reduce_mod_ideal
from groebner.vectors import vector_degree
from resolutions.complexes import FreeComplex
from resolutions.minimal import syzygy_matrix
from resolutions.modules import GradedFreeModule
from resolutions.modules import GradedMatrix
from resolutions.presentations import ModulePresentation


logger = logging.getLogger(__name__)


def _projected_kernel(ring, main, extra):
    """Vectors u in the source of ``main`` with main(u) in the span of the
    columns of ``extra`` plus I times their common target."""
    columns = main.column_vectors() + extra.column_vectors()
    twists = list(main.source.twists) + list(extra.source.twists)
    lifted = kernel_lifts(ring.ambient, columns, list(main.target.twists),
                          twists, ring.gb.polynomials())
    width = main.source.rank
    projected = []
    seen = set()
    for vector in lifted.generators:
        head = dict((term, c) for term, c in vector.items()
                    if term[0] < width)
        head = reduce_mod_ideal(head, ring.gb)
        key = frozenset(head.items())
        if head and key not in seen:
            seen.add(key)
            projected.append(head)
    return projected


def subquotient_presentation(ring, generators, relations):
    """Presentation of span(generators) / (span(generators) meet
    span(relations)); both are maps into one free module."""
    if generators.source.rank == 0:
        return ModulePresentation.zero(ring)
    vectors = _projected_kernel(ring, generators, relations)
    twists = list(generators.source.twists)
    source = GradedFreeModule(ring, [vector_degree(v, twists)
                                     for v in vectors])
    return ModulePresentation(ring, GradedMatrix.from_columns(
        source, generators.source, vectors))


def _check_composition(outgoing, incoming):
    if not outgoing.compose(incoming).is_zero():
        raise ComposesNonzero('maps around the homology do not compose to '
                              'zero')


def homology_presentation(complex_, i):
    """A presentation of H_i of a FreeComplex or PresentedComplex."""
    if isinstance(complex_, FreeComplex):
        return _free_homology(complex_, i)
    return _presented_homology(complex_, i)


def _free_homology(complex_, i):
    ring = complex_.ring
    module = complex_.module(i)
    if module.is_zero():
        return ModulePresentation.zero(ring)
    outgoing = complex_.phi(i)
    incoming = complex_.phi(i + 1)
    _check_composition(outgoing, incoming)
    if i == 0 or outgoing.target.is_zero():
        cycles = GradedMatrix.identity(module)
    else:
        cycles = syzygy_matrix(outgoing)
    presentation = subquotient_presentation(ring, cycles, incoming)
    logger.debug('H_%d presented on %d generators, %d relations', i,
                 presentation.cover.rank, presentation.matrix.source.rank)
    return presentation


def _presented_homology(complex_, i):
    ring = complex_.ring
    module = complex_.module(i)
    if module.cover.is_zero():
        return ModulePresentation.zero(ring)
    outgoing = complex_.phi(i)
    incoming = complex_.phi(i + 1)
    below = complex_.module(i - 1)
    composite = outgoing.compose(incoming)
    if not all(below.contains(v) for v in composite.column_vectors()):
        raise ComposesNonzero('Phi_%d o Phi_%d is not zero' % (i, i + 1))
    if i == 0 or below.cover.is_zero():
        cycles = GradedMatrix.identity(module.cover)
    else:
        vectors = _projected_kernel(ring, outgoing, below.matrix)
        twists = list(module.cover.twists)
        source = GradedFreeModule(ring, [vector_degree(v, twists)
                                         for v in vectors])
        cycles = GradedMatrix.from_columns(source, module.cover, vectors)
    relations = module.matrix.hstack(incoming)
    return subquotient_presentation(ring, cycles, relations)


def homology_lengths(complex_, indices):
    return dict((i, homology_presentation(complex_, i).length())
                for i in indices)
