"""Kernels of maps between graded free modules over S/I.

A map R^a -> R^b over R = S/I is given by its columns f_1..f_a in S^b. The
graph module generated by (f_i, e_i) and (g e_j, 0) for g in I lives in
S^(b+a). Under the position-over-term order the first b positions eliminate,
so the basis elements leading in a later position, shifted back by b, form a
Groebner basis of K = {u in S^a : sum u_i f_i in I S^b}, which contains
I S^a and satisfies K / I S^a = ker(R^a -> R^b).
"""
import logging

from groebner.basis import BuchbergerRun
from groebner.basis import GroebnerBasis
from groebner.vectors import as_vector
from groebner.vectors import shift_positions


logger = logging.getLogger(__name__)


def ideal_module_generators(ideal_gens, rank):
    """The generators g e_j of I S^rank as term dicts."""
    vectors = []
    for position in range(rank):
        for g in ideal_gens:
            if g:
                vectors.append(dict(((position, m), c)
                                    for m, c in g.terms.items()))
    return vectors


def kernel_lifts(ring, columns, target_degrees, source_degrees,
                 ideal_gens=()):
    """Return a GroebnerBasis (in S^a with ``source_degrees``) of the lifted
    kernel K of the map whose columns are ``columns``.
    """
    b = len(target_degrees)
    a = len(source_degrees)
    degrees = list(target_degrees) + list(source_degrees)
    run = BuchbergerRun(ring, degrees)
    generators = []
    for index, column in enumerate(columns):
        vector = dict(as_vector(column))
        vector[(b + index, ring.one_monomial)] = 1
        generators.append(vector)
    generators.extend(ideal_module_generators(ideal_gens, b))
    generators.sort(key=lambda v: min(sum(m) + degrees[pos]
                                      for pos, m in v))
    for vector in generators:
        run.add(vector)
    kernel = []
    for vector in run.reduced_basis():
        lead_position = min(pos for pos, _ in vector)
        if lead_position >= b:
            kernel.append(shift_positions(vector, -b))
    logger.debug('kernel of a %dx%d map: %d lifted generators', b, a,
                 len(kernel))
    return GroebnerBasis(ring, source_degrees, kernel)


def reduce_mod_ideal(vector, ideal_gb):
    """Entrywise normal form of a vector modulo the defining ideal."""
    if ideal_gb is None or not ideal_gb.generators:
        return dict(vector)
    by_position = {}
    for (pos, m), c in vector.items():
        by_position.setdefault(pos, {})[(0, m)] = c
    reduced = {}
    for pos, entry in by_position.items():
        for (_, m), c in ideal_gb.normal_form(entry).items():
            reduced[(pos, m)] = c
    return reduced


def syzygy_vectors(ring, columns, target_degrees, source_degrees,
                   ideal_gb=None):
    """Generators of ker(R^a -> R^b), reduced modulo I and nonzero."""
    ideal_gens = ideal_gb.polynomials() if ideal_gb is not None else ()
    lifted = kernel_lifts(ring, columns, target_degrees, source_degrees,
                          ideal_gens)
    vectors = []
    for vector in lifted.generators:
        reduced = reduce_mod_ideal(vector, ideal_gb)
        if reduced:
            vectors.append(reduced)
    return vectors
