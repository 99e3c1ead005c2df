import itertools
import logging
import random

from django.conf import settings
from django.utils.functional import cached_property

from base.exceptions import InvalidInput
from base.exceptions import SearchExhausted
from core_algebra.polynomials import Polynomial
from groebner.hilbert import hilbert_function
from groebner.hilbert import krull_dimension
from groebner.ideals import HomogeneousIdeal
from groebner.ideals import ideal_quotient
from groebner.ideals import maximal_ideal
from groebner.ideals import monomials_of_degree
from groebner.ideals import saturation


logger = logging.getLogger(__name__)


class QuotientRing(object):
    """R = S/I for a homogeneous ideal I of the ambient PolyRing S.

    Elements of R are Polynomials of S, kept in normal form modulo I.
    """

    def __init__(self, ambient, ideal=None):
        if ideal is None:
            ideal = HomogeneousIdeal(ambient, [])
        elif not isinstance(ideal, HomogeneousIdeal):
            ideal = HomogeneousIdeal(ambient, ideal)
        if ideal.is_unit():
            raise InvalidInput('the defining ideal of a ring must be proper')
        self.ambient = ambient
        self.ideal = ideal

    @property
    def field(self):
        return self.ambient.field

    @property
    def characteristic(self):
        return self.ambient.field.p

    @property
    def gb(self):
        return self.ideal.groebner_basis()

    @cached_property
    def dimension(self):
        return krull_dimension(self.ideal)

    @cached_property
    def maximal_ideal(self):
        return maximal_ideal(self.ambient)

    @cached_property
    def h0_ideal(self):
        """The preimage in S of H^0_m(R), i.e. (I : m^infinity)."""
        return saturation(self.ideal, self.maximal_ideal)

    @cached_property
    def socle_ideal(self):
        """The preimage in S of Soc(R), i.e. (I : m)."""
        return ideal_quotient(self.ideal, self.maximal_ideal)

    @cached_property
    def depth_zero(self):
        return self.h0_ideal != self.ideal

    @cached_property
    def h0_top_degree(self):
        """The largest degree in which H^0_m(R) is nonzero, or -1."""
        generated = max([g.homogeneous_degree
                         for g in self.h0_ideal.minimal_generators()] or [0])
        top = -1
        degree = 0
        while True:
            gap = (hilbert_function(self.ideal, degree) -
                   hilbert_function(self.h0_ideal, degree))
            if gap:
                top = degree
            elif degree >= generated:
                return top
            degree += 1

    def annihilator(self, f):
        """The preimage in S of (0 :_R f)."""
        return ideal_quotient(self.ideal, HomogeneousIdeal(self.ambient, [f]))

    def is_monomial(self):
        return self.ideal.is_monomial()

    def reduce(self, f):
        if not isinstance(f, Polynomial):
            f = self.ambient.constant(f)
        if self.ideal.is_zero():
            return f
        return self.ideal.normal_form(f)

    def is_zero(self, f):
        return not self.reduce(f)

    def hilbert_function(self, degree):
        return hilbert_function(self.ideal, degree)

    def quotient(self, extra):
        """R / (extra) as a QuotientRing of the same ambient ring."""
        if not isinstance(extra, HomogeneousIdeal):
            extra = HomogeneousIdeal(self.ambient, extra)
        return QuotientRing(self.ambient, self.ideal + extra)

    def summary(self):
        return {
            'characteristic': self.characteristic,
            'variables': list(self.ambient.variables),
            'ideal': [str(g) for g in self.ideal.minimal_generators()],
            'dimension': self.dimension,
            'depth_zero': self.depth_zero,
        }

    def __eq__(self, other):
        return (isinstance(other, QuotientRing) and
                self.ambient == other.ambient and self.ideal == other.ideal)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.ambient, self.ideal))

    def __repr__(self):
        return '%r/%s' % (self.ambient, self.ideal)


def candidate_elements(ring, degree, count, rng):
    """Homogeneous elements of the given degree: the monomials first, in
    variable order, then random combinations drawn from ``rng``."""
    ambient = ring.ambient
    monomials = monomials_of_degree(ambient.nvars, degree)
    monomials.sort(reverse=True)
    produced = 0
    for monomial in monomials:
        if produced >= count:
            return
        produced += 1
        yield ambient.monomial(monomial)
    p = ring.characteristic
    while produced < count:
        f = Polynomial(ambient, dict(
            (m, rng.randrange(p)) for m in monomials))
        if f:
            produced += 1
            yield f


def depth(ring, tries=None, seed=0):
    """Depth of R by a greedy regular-sequence search.

    An element f extends the sequence when (J : f) = J for the ideal J
    generated so far; the search stops once m is associated to S/J.
    """
    if tries is None:
        tries = getattr(settings, 'FROBSYZ_PARAMETER_TRIES', 64)
    rng = random.Random(seed)
    m = ring.maximal_ideal
    current = ring.ideal
    length = 0
    while krull_dimension(current) > 0:
        if ideal_quotient(current, m) != current:
            break
        found = None
        candidates = itertools.chain(
            candidate_elements(ring, 1, tries // 2, rng),
            candidate_elements(ring, 2, tries - tries // 2, rng))
        for candidate in itertools.islice(candidates, tries):
            principal = HomogeneousIdeal(ring.ambient, [candidate])
            if ideal_quotient(current, principal) == current:
                found = candidate
                break
        if found is None:
            raise SearchExhausted(
                'no regular element found among %d candidates' % tries,
                tries=tries)
        logger.debug('regular element %s extends the sequence to length %d',
                     found, length + 1)
        current = current + HomogeneousIdeal(ring.ambient, [found])
        length += 1
    return length


def is_cohen_macaulay(ring, tries=None, seed=0):
    return depth(ring, tries=tries, seed=seed) == ring.dimension
