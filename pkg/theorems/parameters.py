"""Parameter elements with (0 : x) = H^0_m(R), and the search for a power
of the maximal ideal that turns a finite syzygy length into sigma_i."""
import logging
import random

from django.conf import settings

from base.exceptions import CapExceeded
from base.exceptions import HypothesisFails
from base.exceptions import InvalidInput
from base.exceptions import SearchExhausted
from groebner.hilbert import krull_dimension
from groebner.ideals import HomogeneousIdeal
from resolutions.minimal import minimal_free_resolution
from resolutions.minimal import syzygy_module
from resolutions.minimal import syzygy_profile
from resolutions.presentations import ModulePresentation
from resolutions.rings import candidate_elements
from tor_sigma.tor import sigma
from tor_sigma.tor import tor_table


logger = logging.getLogger(__name__)


class ParameterChoice(object):
    """Elements x_1..x_d together with the properties certified for them."""

    def __init__(self, ring, elements, system_of_parameters, colon_flags):
        self.ring = ring
        self.elements = list(elements)
        self.system_of_parameters = system_of_parameters
        self.colon_flags = list(colon_flags)

    @property
    def degrees(self):
        return [f.homogeneous_degree for f in self.elements]

    @property
    def certified(self):
        return self.system_of_parameters and all(self.colon_flags)

    @classmethod
    def verify(cls, ring, elements):
        """Certify arbitrary elements from scratch."""
        elements = list(elements)
        ideal = ring.ideal + HomogeneousIdeal(ring.ambient, elements)
        is_sop = (len(elements) == ring.dimension and
                  krull_dimension(ideal) == 0)
        flags = [ring.annihilator(f) == ring.h0_ideal for f in elements]
        return cls(ring, elements, is_sop, flags)

    def to_data(self):
        return {'elements': [str(f) for f in self.elements],
                'degrees': self.degrees,
                'system_of_parameters': self.system_of_parameters,
                'colon_flags': self.colon_flags}

    def __repr__(self):
        return '<ParameterChoice %s>' % ', '.join(str(f)
                                                  for f in self.elements)


def choose_parameters(ring, n=1, tries=None, seed=0):
    """Greedy verify-and-retry search for a system of parameters of degree
    ``n`` whose members all have annihilator H^0_m(R).

    Monomials are tried first, then random combinations; each accepted
    element must lower the dimension by one.
    """
    if n < 1:
        raise InvalidInput('parameter degree must be at least 1')
    if tries is None:
        tries = getattr(settings, 'FROBSYZ_PARAMETER_TRIES', 64)
    rng = random.Random(seed)
    h0 = ring.h0_ideal
    current = ring.ideal
    elements = []
    for target in range(ring.dimension - 1, -1, -1):
        found = None
        for candidate in candidate_elements(ring, n, tries, rng):
            if ring.is_zero(candidate):
                continue
            extended = current + HomogeneousIdeal(ring.ambient, [candidate])
            if krull_dimension(extended) != target:
                continue
            if ring.annihilator(candidate) != h0:
                continue
            found = candidate
            current = extended
            break
        if found is None:
            raise SearchExhausted(
                'no degree %d parameter found among %d candidates'
                % (n, tries), degree=n, tries=tries)
        logger.debug('accepted parameter %s', found)
        elements.append(found)
    choice = ParameterChoice.verify(ring, elements)
    if not choice.certified:
        raise SearchExhausted('accepted elements failed re-verification')
    return choice


def find_good_colength_ideal(module, i, n_cap=6):
    """Smallest n <= n_cap with m^n killing M and Syz_(i+1) M,
    Tor_(i+1)(M, R/m^n) = 0 and sigma_i(M, R/m^n) = sigma_i(M, R/m^(n+1)),
    a power on which sigma_i equals the length of Syz_(i+1) M.

    Returns ``(n, m^n, evidence)``.
    """
    if n_cap < 1:
        raise InvalidInput('n_cap must be at least 1', n_cap=n_cap)
    ring = module.ring
    resolution = minimal_free_resolution(module, i + 2)
    profile = syzygy_profile(resolution, i + 1)
    if not profile.finite:
        raise HypothesisFails('Syz_%d has infinite length' % (i + 1),
                              index=i + 1)
    syzygy = syzygy_module(module, i + 1, resolution)
    m = ring.maximal_ideal

    def quotient(n):
        return ModulePresentation.from_ideal(ring, (m ** n).generators)

    for n in range(1, n_cap + 1):
        power = m ** n
        if not (module.annihilated_by(power) and
                syzygy.annihilated_by(power)):
            continue
        table = tor_table(module, quotient(n), i + 1, resolution)
        if table[i + 1] != 0:
            continue
        current = sigma(module, None, i, table)
        following = sigma(module, quotient(n + 1), i,
                          tor_table(module, quotient(n + 1), i, resolution))
        if current != following:
            continue
        if current != profile.length:
            logger.warning('sigma_%d(M, R/m^%d) = %d but Syz_%d has length %d',
                           i, n, current, i + 1, profile.length)
            continue
        evidence = {
            'n': n,
            'syzygy_length': str(profile.length),
            'sigma': str(current),
            'sigma_next': str(following),
            'tor_vanishes': True,
            'identity_holds': True,
        }
        return n, power, evidence
    raise CapExceeded('no good power of m up to %d' % n_cap, n_cap=n_cap)
