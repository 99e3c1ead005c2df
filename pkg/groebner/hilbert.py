"""Hilbert functions, dimension and length read off leading terms.

Everything here works on a GroebnerBasis of a submodule K of a graded free
module S^r and describes the quotient S^r / K. An ideal I is the rank-one
case and describes S / I.
"""
import itertools

from sympy.polys.monomials import monomial_divides

from base.exceptions import InfiniteLength
from base.exceptions import NotMonomial
from groebner.ideals import HomogeneousIdeal
from groebner.ideals import monomials_of_degree


def _basis_of(target):
    if isinstance(target, HomogeneousIdeal):
        return target.groebner_basis()
    return target


def _leads_by_position(gb):
    leads = {}
    for position, monomial in gb.leads:
        leads.setdefault(position, []).append(monomial)
    return leads


def standard_monomials(target, degree, position=0):
    """Monomials of S^r at ``position`` whose total degree (including the
    twist of that position) is ``degree`` and which are not leading terms."""
    gb = _basis_of(target)
    leads = _leads_by_position(gb).get(position, [])
    own = degree - gb.degrees[position]
    return [m for m in monomials_of_degree(gb.ring.nvars, own)
            if not any(monomial_divides(lead, m) for lead in leads)]


def hilbert_function(target, degree):
    """dim_k of the degree ``degree`` piece of the quotient."""
    gb = _basis_of(target)
    return sum(len(standard_monomials(gb, degree, position))
               for position in range(gb.rank))


def _dimension_of_monomial_quotient(nvars, leads):
    if any(sum(lead) == 0 for lead in leads):
        return -1
    supports = [frozenset(i for i, e in enumerate(lead) if e)
                for lead in leads]
    for size in range(nvars, -1, -1):
        for subset in itertools.combinations(range(nvars), size):
            chosen = frozenset(subset)
            if not any(support <= chosen for support in supports):
                return size
    return -1


def krull_dimension(target):
    """Krull dimension of the quotient; -1 for the zero module."""
    gb = _basis_of(target)
    leads = _leads_by_position(gb)
    return max([_dimension_of_monomial_quotient(gb.ring.nvars,
                                                leads.get(position, []))
                for position in range(gb.rank)] or [-1])


def length_of_quotient(target):
    """Exact length of a finite-length quotient."""
    gb = _basis_of(target)
    dimension = krull_dimension(gb)
    if dimension > 0:
        raise InfiniteLength('quotient has Krull dimension %d' % dimension,
                             dimension=dimension)
    leads = _leads_by_position(gb)
    total = 0
    for position in range(gb.rank):
        position_leads = leads.get(position, [])
        own = 0
        while True:
            count = sum(1 for m in monomials_of_degree(gb.ring.nvars, own)
                        if not any(monomial_divides(lead, m)
                                   for lead in position_leads))
            if not count:
                break
            total += count
            own += 1
    return total


def min_primes_monomial(ideal):
    """Minimal primes of a monomial ideal, each a set of variable indices.

    They are the minimal sets of variables meeting the support of every
    minimal generator, listed by size and then lexicographically.
    """
    if not ideal.is_monomial():
        raise NotMonomial('minimal primes need a monomial ideal, got %s' %
                          ideal)
    gens = ideal.minimal_generators()
    if any(g.is_constant() for g in gens):
        return []
    supports = [g.support() for g in gens]
    nvars = ideal.ring.nvars
    primes = []
    for size in range(nvars + 1):
        for subset in itertools.combinations(range(nvars), size):
            chosen = frozenset(subset)
            if any(prime <= chosen for prime in primes):
                continue
            if all(support & chosen for support in supports):
                primes.append(chosen)
    return primes


def prime_ideal(ring, variables):
    return HomogeneousIdeal(ring, [ring.gens()[i] for i in sorted(variables)])
