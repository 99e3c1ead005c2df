"""Buchberger's algorithm for homogeneous submodules of graded free modules.

Pairs are processed in increasing degree of their lcm (for homogeneous input
this is the sugar degree), which also lets callers complete a basis only up
to a degree bound when they just need membership tests in low degree.
"""
import heapq
import itertools
import logging

from sympy.polys.monomials import monomial_deg
from sympy.polys.monomials import monomial_div
from sympy.polys.monomials import monomial_divides
from sympy.polys.monomials import monomial_lcm
from sympy.polys.monomials import monomial_mul

from base.exceptions import NonHomogeneous
from base.exceptions import RingMismatch
from core_algebra.polynomials import Polynomial
from groebner.vectors import as_vector
from groebner.vectors import module_key
from groebner.vectors import vector_degree
from groebner.vectors import vector_to_polynomial
from groebner.vectors import vector_to_polynomials


logger = logging.getLogger(__name__)


def _normal_form(vector, by_position, key, p, skip=None):
    """Fully reduce ``vector`` against monic elements grouped by position."""
    work = dict(vector)
    remainder = {}
    while work:
        term = max(work, key=key)
        coefficient = work[term]
        position, monomial = term
        divisor = None
        for element in by_position.get(position, ()):
            if element is not skip and monomial_divides(element.lead[1],
                                                        monomial):
                divisor = element
                break
        if divisor is None:
            remainder[term] = coefficient
            del work[term]
            continue
        shift = monomial_div(monomial, divisor.lead[1])
        for (pos, mon), value in divisor.vector.items():
            target = (pos, monomial_mul(mon, shift))
            updated = (work.get(target, 0) - coefficient * value) % p
            if updated:
                work[target] = updated
            else:
                work.pop(target, None)
    return remainder


class _Element(object):
    __slots__ = ('vector', 'lead', 'degree')

    def __init__(self, vector, key, p, degrees):
        lead = max(vector, key=key)
        inverse = pow(vector[lead], p - 2, p)
        if inverse != 1:
            vector = dict((t, c * inverse % p) for t, c in vector.items())
        self.vector = vector
        self.lead = lead
        self.degree = monomial_deg(lead[1]) + degrees[lead[0]]


class BuchbergerRun(object):
    """Incremental Buchberger computation.

    Generators may be added at any time; ``complete(max_degree)`` processes
    every pending pair up to that degree. After ``complete()`` with no bound
    the elements form a Groebner basis.
    """

    def __init__(self, ring, degrees):
        self.ring = ring
        self.degrees = list(degrees)
        self.p = ring.field.p
        self.key = module_key(ring)
        self.elements = []
        self.by_position = {}
        self._pairs = []
        self._pending = set()
        self._counter = itertools.count()
        self._ideal_case = len(self.degrees) == 1
        self.reductions = 0

    def reduce(self, vector):
        return _normal_form(as_vector(vector), self.by_position, self.key,
                            self.p)

    def add(self, vector):
        """Reduce and adjoin a generator; return True if it was new."""
        vector = as_vector(vector)
        vector_degree(vector, self.degrees)
        remainder = self.reduce(vector)
        if not remainder:
            return False
        self._append(remainder)
        return True

    def _append(self, vector):
        element = _Element(vector, self.key, self.p, self.degrees)
        index = len(self.elements)
        position = element.lead[0]
        for other_index, other in enumerate(self.elements):
            if other.lead[0] != position:
                continue
            lcm = monomial_lcm(other.lead[1], element.lead[1])
            degree = monomial_deg(lcm) + self.degrees[position]
            heapq.heappush(self._pairs,
                           (degree, next(self._counter), other_index, index))
            self._pending.add((other_index, index))
        self.elements.append(element)
        self.by_position.setdefault(position, []).append(element)

    def _coprime(self, first, second):
        if not self._ideal_case:
            return False
        return all(not (a and b) for a, b in zip(first.lead[1],
                                                 second.lead[1]))

    def _chain(self, i, j):
        lcm = monomial_lcm(self.elements[i].lead[1], self.elements[j].lead[1])
        position = self.elements[i].lead[0]
        for k, element in enumerate(self.elements):
            if k == i or k == j or element.lead[0] != position:
                continue
            if not monomial_divides(element.lead[1], lcm):
                continue
            if ((min(i, k), max(i, k)) not in self._pending and
                    (min(j, k), max(j, k)) not in self._pending):
                return True
        return False

    def _s_vector(self, i, j):
        first, second = self.elements[i], self.elements[j]
        lcm = monomial_lcm(first.lead[1], second.lead[1])
        shift_first = monomial_div(lcm, first.lead[1])
        shift_second = monomial_div(lcm, second.lead[1])
        p = self.p
        result = {}
        for (pos, mon), value in first.vector.items():
            result[(pos, monomial_mul(mon, shift_first))] = value
        for (pos, mon), value in second.vector.items():
            term = (pos, monomial_mul(mon, shift_second))
            updated = (result.get(term, 0) - value) % p
            if updated:
                result[term] = updated
            else:
                result.pop(term, None)
        return result

    def complete(self, max_degree=None):
        while self._pairs:
            degree, _, i, j = self._pairs[0]
            if max_degree is not None and degree > max_degree:
                break
            heapq.heappop(self._pairs)
            if (self._coprime(self.elements[i], self.elements[j]) or
                    self._chain(i, j)):
                self._pending.discard((i, j))
                continue
            self.reductions += 1
            remainder = self.reduce(self._s_vector(i, j))
            if remainder:
                self._append(remainder)
            self._pending.discard((i, j))
        return self

    def reduced_basis(self):
        """Return the reduced Groebner basis as a list of monic vectors."""
        self.complete()
        minimal = []
        for element in self.elements:
            position, monomial = element.lead
            if any(other is not element and other.lead[0] == position and
                   monomial_divides(other.lead[1], monomial)
                   for other in self.elements):
                continue
            minimal.append(element)
        by_position = {}
        for element in minimal:
            by_position.setdefault(element.lead[0], []).append(element)
        reduced = []
        for element in minimal:
            vector = _normal_form(element.vector, by_position, self.key,
                                  self.p, skip=element)
            reduced.append(vector)
        logger.debug('Buchberger finished: %d elements, %d reductions, '
                     '%d in reduced basis', len(self.elements),
                     self.reductions, len(reduced))
        return reduced


class GroebnerBasis(object):
    """A reduced Groebner basis of a submodule of a graded free S-module.

    ``degrees`` are the degrees of the free basis elements; an ideal is the
    rank-one case with degrees [0]. Generators are monic term dicts sorted by
    decreasing leading term, which makes the representation canonical.
    """

    def __init__(self, ring, degrees, generators, reduced=True):
        self.ring = ring
        self.degrees = list(degrees)
        self.reduced = reduced
        key = module_key(ring)
        self._key = key
        self.generators = sorted(generators, key=lambda v: key(max(v, key=key)),
                                 reverse=True)
        self.leads = [max(v, key=key) for v in self.generators]
        self.order = ring.order
        self._by_position = None

    @property
    def rank(self):
        return len(self.degrees)

    def _elements(self):
        if self._by_position is None:
            by_position = {}
            p = self.ring.field.p
            for vector in self.generators:
                element = _Element(vector, self._key, p, self.degrees)
                by_position.setdefault(element.lead[0], []).append(element)
            self._by_position = by_position
        return self._by_position

    def normal_form(self, element):
        vector = as_vector(element)
        remainder = _normal_form(vector, self._elements(), self._key,
                                 self.ring.field.p)
        if isinstance(element, Polynomial):
            return vector_to_polynomial(self.ring, remainder)
        return remainder

    def contains(self, element):
        return not _normal_form(as_vector(element), self._elements(),
                                self._key, self.ring.field.p)

    def lead_monomials(self, position=0):
        return [mon for pos, mon in self.leads if pos == position]

    def polynomials(self):
        """Generators as Polynomials (rank-one bases only)."""
        return [vector_to_polynomial(self.ring, v) for v in self.generators]

    def rows(self):
        return [vector_to_polynomials(self.ring, v, self.rank)
                for v in self.generators]

    def is_monomial(self):
        return all(len(v) == 1 for v in self.generators)

    def is_unit(self):
        """True when the submodule is the whole free module."""
        positions = set(pos for pos, mon in self.leads
                        if monomial_deg(mon) == 0)
        return len(positions) == self.rank

    def satisfies_buchberger_criterion(self):
        """Check that every S-vector reduces to zero."""
        run = BuchbergerRun(self.ring, self.degrees)
        run.elements = [_Element(v, self._key, self.ring.field.p, self.degrees)
                        for v in self.generators]
        for element in run.elements:
            run.by_position.setdefault(element.lead[0], []).append(element)
        for i, j in itertools.combinations(range(len(run.elements)), 2):
            if run.elements[i].lead[0] != run.elements[j].lead[0]:
                continue
            if run.reduce(run._s_vector(i, j)):
                return False
        return True

    def __eq__(self, other):
        return (isinstance(other, GroebnerBasis) and
                self.ring == other.ring and self.degrees == other.degrees and
                self.generators == other.generators)

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return '<GroebnerBasis rank=%d size=%d over %r>' % (
            self.rank, len(self.generators), self.ring)

    def to_data(self):
        return {
            'degrees': self.degrees,
            'generators': [
                sorted([pos, list(mon), coefficient]
                       for (pos, mon), coefficient in vector.items())
                for vector in self.generators],
        }

    @classmethod
    def from_data(cls, ring, data):
        generators = []
        for terms in data['generators']:
            generators.append(dict(((pos, tuple(mon)), coefficient)
                                   for pos, mon, coefficient in terms))
        return cls(ring, data['degrees'], generators)


def buchberger(ring, generators, degrees=None):
    """Return the reduced Groebner basis of the submodule spanned by
    ``generators`` (Polynomials, sequences of Polynomials or term dicts).
    """
    vectors = []
    for generator in generators:
        if isinstance(generator, Polynomial) and generator.ring != ring:
            raise RingMismatch('generator %s is not in %r' % (generator, ring))
        vectors.append(as_vector(generator))
    if degrees is None:
        rank = 1 + max([pos for v in vectors for pos, _ in v] or [0])
        degrees = [0] * rank
    for vector in vectors:
        try:
            vector_degree(vector, degrees)
        except NonHomogeneous as err:
            raise NonHomogeneous('non-homogeneous generator: %s' % err.message,
                                 **err.details)
    run = BuchbergerRun(ring, degrees)
    vectors.sort(key=lambda v: vector_degree(v, degrees) or 0)
    for vector in vectors:
        if vector:
            run.add(vector)
    return GroebnerBasis(ring, degrees, run.reduced_basis())


def normal_form(element, gb):
    return gb.normal_form(element)
