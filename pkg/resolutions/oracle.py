"""Degree-by-degree homology lengths by dense linear algebra over GF(p).

This path shares nothing with the presentation-based homology beyond
normal forms modulo I, so it serves as an independent cross-check.
"""
from django.conf import settings
import numpy

from groebner.hilbert import standard_monomials


def rank_mod_p(matrix, p):
    """Rank of an integer matrix over GF(p) by row reduction."""
    a = numpy.array(matrix, dtype=numpy.int64) % p
    if a.size == 0:
        return 0
    rows, cols = a.shape
    rank = 0
    for col in range(cols):
        if rank == rows:
            break
        candidates = numpy.nonzero(a[rank:, col])[0]
        if not len(candidates):
            continue
        pivot = rank + candidates[0]
        if pivot != rank:
            a[[rank, pivot]] = a[[pivot, rank]]
        inverse = pow(int(a[rank, col]), p - 2, p)
        a[rank] = (a[rank] * inverse) % p
        others = numpy.nonzero(a[:, col])[0]
        for r in others:
            if r != rank:
                a[r] = (a[r] - a[r, col] * a[rank]) % p
        rank += 1
    return rank


def degree_basis(module, degree):
    """(position, monomial) pairs spanning the degree piece of a free module
    over R = S/I."""
    ring = module.ring
    basis = []
    for position, twist in enumerate(module.twists):
        for monomial in standard_monomials(ring.ideal, degree - twist):
            basis.append((position, monomial))
    return basis


def matrix_in_degree(phi, degree):
    ring = phi.ring
    ambient = ring.ambient
    source_basis = degree_basis(phi.source, degree)
    target_basis = degree_basis(phi.target, degree)
    index = dict((term, k) for k, term in enumerate(target_basis))
    columns = []
    for position, monomial in source_basis:
        column = [0] * len(target_basis)
        shift = ambient.monomial(monomial)
        for row, entry in enumerate(phi.column(position)):
            if not entry:
                continue
            image = ring.reduce(entry * shift)
            for mon, coefficient in image.terms.items():
                column[index[(row, mon)]] = coefficient
        columns.append(column)
    if not columns or not target_basis:
        return numpy.zeros((len(target_basis), len(source_basis)),
                           dtype=numpy.int64)
    return numpy.array(columns, dtype=numpy.int64).T


def homology_length_oracle(complex_, i, degree_bound=None):
    """sum over degrees of dim ker(phi_i)_d - rank(phi_(i+1))_d."""
    if degree_bound is None:
        degree_bound = getattr(settings, 'FROBSYZ_ORACLE_DEGREE_BOUND', 30)
    module = complex_.module(i)
    if module.is_zero():
        return 0
    p = complex_.ring.characteristic
    outgoing = complex_.phi(i)
    incoming = complex_.phi(i + 1)
    total = 0
    for degree in range(min(module.twists), degree_bound + 1):
        size = len(degree_basis(module, degree))
        if not size:
            continue
        kernel = size - rank_mod_p(matrix_in_degree(outgoing, degree), p)
        image = rank_mod_p(matrix_in_degree(incoming, degree), p)
        total += kernel - image
    return total
