import itertools
import logging
import threading

from django.conf import settings

from base.exceptions import NonHomogeneous
from base.exceptions import NotMonomial
from base.exceptions import RingMismatch
from base.exceptions import SaturationCapExceeded
from core_algebra.polynomials import Polynomial
from groebner.basis import buchberger
from groebner.syzygies import kernel_lifts


logger = logging.getLogger(__name__)


def monomials_of_degree(nvars, degree):
    """All exponent tuples of the given total degree, in a fixed order."""
    if degree < 0:
        return []
    result = []
    for combo in itertools.combinations_with_replacement(range(nvars),
                                                         degree):
        exponents = [0] * nvars
        for index in combo:
            exponents[index] += 1
        result.append(tuple(exponents))
    return result


class HomogeneousIdeal(object):
    """An ideal of a PolyRing given by homogeneous generators.

    The Groebner basis is computed on first use and cached; the cache is
    filled under a lock so that concurrent readers see one basis.
    """

    def __init__(self, ring, generators=()):
        self.ring = ring
        gens = []
        for g in generators:
            if not isinstance(g, Polynomial):
                g = ring.constant(g)
            if g.ring != ring:
                raise RingMismatch('generator %s is not in %r' % (g, ring))
            if not g.is_homogeneous():
                raise NonHomogeneous('non-homogeneous generator %s' % g,
                                     generator=g)
            if g:
                gens.append(g)
        self.generators = tuple(gens)
        self._gb = None
        self._lock = threading.Lock()

    @classmethod
    def from_basis(cls, gb):
        ideal = cls(gb.ring, gb.polynomials())
        ideal._gb = gb
        return ideal

    def groebner_basis(self):
        if self._gb is None:
            with self._lock:
                if self._gb is None:
                    self._gb = buchberger(self.ring, self.generators,
                                          degrees=[0])
        return self._gb

    def adopt_basis(self, gb):
        """Install a basis computed elsewhere (a cache reload) after checking
        the Buchberger criterion and that it reduces every generator."""
        if gb.ring != self.ring or gb.degrees != [0]:
            raise ValueError('the basis belongs to another ring')
        if not gb.satisfies_buchberger_criterion():
            raise ValueError('the basis fails the Buchberger criterion')
        if not all(gb.contains(g) for g in self.generators):
            raise ValueError('the basis misses a generator')
        with self._lock:
            self._gb = gb

    def normal_form(self, f):
        return self.groebner_basis().normal_form(f)

    def contains(self, f):
        return self.groebner_basis().contains(f)

    def contains_ideal(self, other):
        return all(self.contains(g) for g in other.generators)

    def is_zero(self):
        return not self.generators

    def is_unit(self):
        return self.groebner_basis().is_unit()

    def is_monomial(self):
        return self.groebner_basis().is_monomial()

    def minimal_generators(self):
        """The reduced basis elements; for monomial ideals these are the
        minimal monomial generators."""
        return self.groebner_basis().polynomials()

    def __add__(self, other):
        self._check_ring(other)
        return HomogeneousIdeal(self.ring, self.generators + other.generators)

    def __mul__(self, other):
        self._check_ring(other)
        return HomogeneousIdeal(self.ring, [
            f * g for f in self.generators for g in other.generators])

    def __pow__(self, k):
        if k == 0:
            return unit_ideal(self.ring)
        result = self
        for _ in range(k - 1):
            result = result * self
        return result

    def _check_ring(self, other):
        if other.ring != self.ring:
            raise RingMismatch('ideals live in %r and %r' %
                               (self.ring, other.ring))

    def __eq__(self, other):
        if not isinstance(other, HomogeneousIdeal):
            return NotImplemented
        return (self.ring == other.ring and
                self.groebner_basis() == other.groebner_basis())

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.ring, tuple(
            frozenset(v.items()) for v in self.groebner_basis().generators)))

    def __str__(self):
        return '(%s)' % ', '.join(str(g) for g in self.generators)

    def __repr__(self):
        return '<HomogeneousIdeal %s in %r>' % (self, self.ring)


def unit_ideal(ring):
    return HomogeneousIdeal(ring, [ring.one()])


def zero_ideal(ring):
    return HomogeneousIdeal(ring, [])


def maximal_ideal(ring):
    return HomogeneousIdeal(ring, ring.gens())


def power_of_maximal_ideal(ring, k):
    return HomogeneousIdeal(ring, [
        ring.monomial(m) for m in monomials_of_degree(ring.nvars, k)])


def ideal_quotient(I, J):
    """Return (I : J) = {f : f J in I}."""
    I._check_ring(J)
    ring = I.ring
    gens = J.generators
    if not gens:
        return unit_ideal(ring)
    columns = [[g for g in gens]]
    target_degrees = [-g.homogeneous_degree for g in gens]
    lifted = kernel_lifts(ring, columns, target_degrees, [0],
                          I.groebner_basis().polynomials())
    return HomogeneousIdeal.from_basis(lifted)


def saturation(I, J, cap=None):
    """Return (I : J^infinity) by iterating ideal quotients."""
    if cap is None:
        cap = getattr(settings, 'FROBSYZ_SATURATION_CAP', 50)
    current = I
    for iteration in range(1, cap + 1):
        following = ideal_quotient(current, J)
        if following == current:
            logger.debug('saturation stabilized after %d quotient(s)',
                         iteration)
            return current
        current = following
    raise SaturationCapExceeded(
        'saturation did not stabilize within %d quotients' % cap, cap=cap)


def monomial_radical(I):
    """Radical of a monomial ideal: squarefree parts of its generators."""
    if not I.is_monomial():
        raise NotMonomial('radical is only computed for monomial ideals: %s'
                          % I)
    ring = I.ring
    gens = []
    for g in I.minimal_generators():
        (monomial, _), = g.terms.items()
        gens.append(ring.monomial(tuple(1 if e else 0 for e in monomial)))
    return HomogeneousIdeal(ring, gens)
