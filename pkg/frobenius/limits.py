"""Asymptotic checks for Frobenius homology of complexes over monomial rings
of dimension one."""
from base.exceptions import HypothesisFails
from base.exceptions import NotMonomial
from frobenius.estimates import DECAYING
from frobenius.estimates import EXACT_ZERO
from frobenius.estimates import FBettiEstimate
from frobenius.estimates import INCONCLUSIVE
from frobenius.estimates import POSITIVE
from frobenius.functor import default_e_max
from frobenius.functor import frobenius_complex
from frobenius.functor import homology_length
from groebner.hilbert import min_primes_monomial
from groebner.ideals import monomial_radical


class LimitReport(object):
    def __init__(self, name, hypothesis, estimate, holds):
        self.name = name
        self.hypothesis = hypothesis
        self.estimate = estimate
        self.holds = holds

    def to_data(self):
        return {'name': self.name, 'hypothesis': self.hypothesis,
                'estimate': self.estimate.to_data(), 'holds': self.holds}


def _holds(estimate, expected):
    """None while the samples are inconclusive."""
    if estimate.verdict == INCONCLUSIVE:
        return None
    return estimate.verdict in expected


def _entries(matrix):
    return [f for row in matrix.entries for f in row if f]


def _estimate(complex_, i, e_max):
    ring = complex_.ring
    if e_max is None:
        e_max = default_e_max(ring.characteristic)
    lengths = [homology_length(frobenius_complex(complex_, e), i)
               for e in range(e_max + 1)]
    return FBettiEstimate.from_lengths(i, ring.characteristic,
                                       ring.dimension, lengths)


def _require_monomial(ring):
    if not ring.is_monomial():
        raise NotMonomial('the defining ideal %s is not monomial' % ring.ideal)


def _outside_prime(f, prime):
    return any(not any(monomial[k] for k in prime) for monomial in f.terms)


def nilpotent_limit_check(complex_, i, e_max=None):
    """With phi_(i+1) nilpotent, lambda(H_i(F^e)) / p^e should tend to 0."""
    if i < 1:
        raise HypothesisFails('the index must be at least 1, not %d' % i,
                              index=i)
    ring = complex_.ring
    _require_monomial(ring)
    nilradical = monomial_radical(ring.ideal)
    outgoing = complex_.phi(i + 1)
    bad = [f for f in _entries(outgoing) if not nilradical.contains(f)]
    if bad:
        raise HypothesisFails('phi_%d has the non-nilpotent entry %s'
                              % (i + 1, bad[0]), index=i + 1)
    estimate = _estimate(complex_, i, e_max)
    return LimitReport('nilpotent', 'every entry of phi_%d is nilpotent'
                       % (i + 1), estimate,
                       _holds(estimate, (EXACT_ZERO, DECAYING)))


def primes_limit_check(complex_, i, e_max=None):
    """With phi_(i+1) nonzero modulo a minimal prime, the same limit should
    be positive."""
    ring = complex_.ring
    _require_monomial(ring)
    if ring.dimension != 1:
        raise HypothesisFails('the ring has dimension %d, not 1'
                              % ring.dimension, dimension=ring.dimension)
    outgoing = complex_.phi(i + 1)
    entries = _entries(outgoing)
    names = ring.ambient.variables
    witness = None
    for prime in min_primes_monomial(ring.ideal):
        if any(_outside_prime(f, prime) for f in entries):
            witness = prime
            break
    if witness is None:
        raise HypothesisFails('phi_%d vanishes modulo every minimal prime'
                              % (i + 1), index=i + 1)
    estimate = _estimate(complex_, i, e_max)
    prime = ', '.join(names[k] for k in sorted(witness))
    return LimitReport('minimal prime', 'phi_%d is nonzero modulo (%s)'
                       % (i + 1, prime), estimate,
                       _holds(estimate, (POSITIVE,)))
