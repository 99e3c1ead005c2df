"""Checkers that instantiate the infinite-syzygy theorems on concrete rings.

Every checker guards its hypotheses with HypothesisFails, computes the
relevant syzygies through ``syzygy_profile`` and, before reporting a
refutation, re-derives the offending length from the presentation
coker phi_(i+1) of the syzygy.
"""
import logging

from base.exceptions import AlgebraError
from base.exceptions import HypothesisFails
from base.exceptions import InfiniteLength
from base.exceptions import InvalidInput
from groebner.hilbert import krull_dimension
from groebner.ideals import HomogeneousIdeal
from resolutions.minimal import minimal_free_resolution
from resolutions.minimal import syzygy_length
from resolutions.minimal import syzygy_module
from resolutions.minimal import syzygy_profile
from resolutions.presentations import ModulePresentation
from resolutions.rings import QuotientRing
from resolutions.rings import is_cohen_macaulay
from theorems.parameters import ParameterChoice
from theorems.parameters import choose_parameters
from theorems.parameters import find_good_colength_ideal
from theorems.results import CheckResult
from theorems.results import FAILED
from theorems.results import NOT_APPLICABLE
from theorems.results import REFUTED
from theorems.results import SATISFIED
from theorems.results import VERIFIED
from tor_sigma.local import local_cohomology_h0
from tor_sigma.local import socle
from tor_sigma.tor import sigma


logger = logging.getLogger(__name__)

SYZYGY_OF_RI = 'syzygy-of-RI'
SYZYGY_OF_H0 = 'syzygy-of-H0'
BAD_TO_GOOD_MODES = (SYZYGY_OF_RI, SYZYGY_OF_H0)


def describe(ring, module):
    return {'ring': ring.summary(),
            'module_generators': len(module.generator_twists),
            'module_length': str(module.length())}


def _require_depth_zero(ring):
    if not ring.depth_zero:
        raise HypothesisFails('the ring has positive depth')


def _require_finite_length(module):
    module.length()
    if module.is_zero():
        raise HypothesisFails('the module is zero')


def _confirm_finite(module, i, resolution, profile):
    """Re-derive a finite Syz_i through its own presentation."""
    confirmed = syzygy_length(module, i, resolution)
    if not confirmed.finite or confirmed.length != profile.length:
        raise AlgebraError('Syz_%d: finiteness tests disagree (%r, %r)'
                           % (i, profile, confirmed), index=i)
    logger.warning('Syz_%d has finite length %d', i, confirmed.length)
    return {'i': i, 'length': str(confirmed.length),
            'presentation': syzygy_module(module, i, resolution).to_data()}


def _infinite_or_witness(module, resolution, indices):
    """Profiles of Syz_i for ``indices`` and the re-verified witnesses of
    those that have finite nonzero length."""
    profiles = []
    witnesses = []
    for i in indices:
        profile = syzygy_profile(resolution, i)
        profiles.append(profile)
        if profile.finite and not profile.is_zero:
            witnesses.append(_confirm_finite(module, i, resolution, profile))
    return profiles, witnesses


def _conclusion(witnesses):
    return REFUTED if witnesses else VERIFIED


def check_syzygy_depth_band(ring, module):
    """Syz_i M has infinite length for 1 <= i <= d."""
    _require_depth_zero(ring)
    _require_finite_length(module)
    d = ring.dimension
    if d < 1:
        raise HypothesisFails('the ring has dimension 0')
    resolution = minimal_free_resolution(module, d)
    profiles, witnesses = _infinite_or_witness(module, resolution,
                                               range(1, d + 1))
    return CheckResult('depth-band', describe(ring, module), SATISFIED,
                       _conclusion(witnesses),
                       {'syzygies': [p.to_data() for p in profiles],
                        'finite': witnesses})


def check_big_socle(ring, module, i_range=(1, 5)):
    """Syz_i M is infinite for i >= d + 2 when l > t (d = 1) or l >= t
    (d >= 2). Smaller indices are recorded without being asserted."""
    _require_depth_zero(ring)
    _require_finite_length(module)
    d = ring.dimension
    if d < 1:
        raise HypothesisFails('the ring has dimension 0')
    profile = socle(ring)
    if d == 1 and not profile.l > profile.t:
        raise HypothesisFails('l = %d is not larger than t = %d'
                              % (profile.l, profile.t), l=profile.l,
                              t=profile.t)
    if d >= 2 and not profile.l >= profile.t:
        raise HypothesisFails('l = %d is smaller than t = %d'
                              % (profile.l, profile.t), l=profile.l,
                              t=profile.t)
    low, high = i_range
    if low < 1 or high < low:
        raise InvalidInput('bad index range %r' % (i_range,))
    resolution = minimal_free_resolution(module, high)
    asserted = [i for i in range(low, high + 1) if i >= d + 2]
    band = [i for i in range(low, high + 1) if i < d + 2]
    profiles, witnesses = _infinite_or_witness(module, resolution, asserted)
    band_profiles = [syzygy_profile(resolution, i) for i in band]
    witness = {
        'socle': profile.to_data(),
        'asserted': [p.to_data() for p in profiles],
        'band': [p.to_data() for p in band_profiles],
        'finite': witnesses,
    }
    if not asserted:
        return CheckResult('big-socle', describe(ring, module), SATISFIED,
                           NOT_APPLICABLE, witness)
    return CheckResult('big-socle', describe(ring, module), SATISFIED,
                       _conclusion(witnesses), witness)


def check_dim2_syzygies(ring, module):
    """Over a ring of dimension 2, Syz_1, Syz_2 and Syz_3 of a finite
    length module are zero or of infinite length."""
    if ring.dimension != 2:
        raise HypothesisFails('the ring has dimension %d, not 2'
                              % ring.dimension, dimension=ring.dimension)
    _require_finite_length(module)
    resolution = minimal_free_resolution(module, 3)
    profiles, witnesses = _infinite_or_witness(module, resolution, (1, 2, 3))
    witness = {'syzygies': [p.to_data() for p in profiles],
               'vacuous': [p.i for p in profiles if p.is_zero],
               'finite': witnesses}
    if all(p.is_zero for p in profiles):
        return CheckResult.vacuous('dim2', describe(ring, module), witness)
    return CheckResult('dim2', describe(ring, module), SATISFIED,
                       _conclusion(witnesses), witness)


def _bad_to_good_guards(ring, mode, i):
    if mode not in BAD_TO_GOOD_MODES:
        raise InvalidInput('unknown mode %r' % mode, mode=mode)
    if not 1 <= ring.dimension <= 2:
        raise HypothesisFails('the ring has dimension %d, not 1 or 2'
                              % ring.dimension, dimension=ring.dimension)
    _require_depth_zero(ring)
    least = 3 if mode == SYZYGY_OF_RI else 4
    if i < least:
        raise HypothesisFails('index %d is below %d' % (i, least), index=i)


def check_bad_to_good(ring, module, mode, i, ideal=None):
    """A finite Syz_i(R/I) for an m-primary I, or a finite
    Syz_(i-2)(H^0_m(R)), forces Syz_(i+1) M to be infinite.

    In the first mode a finite Syz_(i+1) M only refutes when I lies in
    m^n for the n at which lambda(Syz_(i+1) M) = sigma_i(M, R/m^n).
    """
    _bad_to_good_guards(ring, mode, i)
    _require_finite_length(module)
    instance = describe(ring, module)
    name = 'bad-to-good'
    if mode == SYZYGY_OF_RI:
        if ideal is None:
            ideal = ring.maximal_ideal ** 3
        elif not isinstance(ideal, HomogeneousIdeal):
            ideal = HomogeneousIdeal(ring.ambient, ideal)
        if krull_dimension(ring.ideal + ideal) != 0:
            raise HypothesisFails('%s is not m-primary' % ideal)
        source = ModulePresentation.from_ideal(ring, ideal)
        index = i
    else:
        source = local_cohomology_h0(ring)
        index = i - 2
    hypothesis = syzygy_profile(minimal_free_resolution(source, index), index)
    witness = {'mode': mode, 'hypothesis_syzygy': hypothesis.to_data()}
    if not hypothesis.finite:
        return CheckResult.vacuous(name, instance, witness)

    resolution = minimal_free_resolution(module, i + 1)
    profiles, witnesses = _infinite_or_witness(module, resolution, [i + 1])
    witness['syzygy'] = profiles[0].to_data()
    if witnesses and mode == SYZYGY_OF_RI:
        n, power, evidence = find_good_colength_ideal(module, i)
        witness['colength'] = evidence
        if not (power + ring.ideal).contains_ideal(ideal):
            witness['note'] = '%s is not inside m^%d' % (ideal, n)
            return CheckResult.vacuous(name, instance, witness)
    witness['finite'] = witnesses
    return CheckResult(name, instance, SATISFIED, _conclusion(witnesses),
                       witness)


def check_even_index(ring, module, x, bound=4):
    """With d = 1 and (0 : x) = (0 : m), Syz_(i+1) M is infinite for even
    i >= 2. Odd i are recorded only."""
    if ring.dimension != 1:
        raise HypothesisFails('the ring has dimension %d, not 1'
                              % ring.dimension, dimension=ring.dimension)
    if not ring.maximal_ideal.contains(x):
        raise HypothesisFails('%s is not in the maximal ideal' % x, element=x)
    if ring.annihilator(x) != ring.socle_ideal:
        raise HypothesisFails('(0 : %s) is not (0 : m)' % x, element=x)
    _require_finite_length(module)
    resolution = minimal_free_resolution(module, bound + 1)
    even = [i + 1 for i in range(2, bound + 1, 2)]
    odd = [i + 1 for i in range(1, bound + 1, 2)]
    profiles, witnesses = _infinite_or_witness(module, resolution, even)
    witness = {'element': str(x),
               'syzygies': [p.to_data() for p in profiles],
               'outside_scope': [syzygy_profile(resolution, j).to_data()
                                 for j in odd],
               'finite': witnesses}
    live = [p for p in profiles if not p.is_zero]
    if not live:
        return CheckResult.vacuous('even-index', describe(ring, module),
                                   witness)
    return CheckResult('even-index', describe(ring, module), SATISFIED,
                       _conclusion(witnesses), witness)


def check_syz5_parameter(ring, elements):
    """Syz_5(R/I) is infinite for I generated by a system of parameters
    (d = 1), or by one whose members have annihilator H^0_m(R) with
    R/H^0_m(R) Cohen-Macaulay (d = 2)."""
    _require_depth_zero(ring)
    d = ring.dimension
    if d not in (1, 2):
        raise HypothesisFails('the ring has dimension %d, not 1 or 2' % d,
                              dimension=d)
    if isinstance(elements, ParameterChoice):
        elements = elements.elements
    choice = ParameterChoice.verify(ring, elements)
    if not choice.system_of_parameters:
        raise HypothesisFails('%s is not a system of parameters'
                              % ', '.join(str(f) for f in elements))
    witness = {'parameters': choice.to_data()}
    if d == 2:
        if not all(choice.colon_flags):
            raise HypothesisFails('some parameter has annihilator other '
                                  'than H^0_m(R)')
        reduced = QuotientRing(ring.ambient, ring.h0_ideal)
        if not is_cohen_macaulay(reduced):
            raise HypothesisFails('R/H^0_m(R) is not Cohen-Macaulay')
        witness['reduced_cohen_macaulay'] = True
    quotient = ModulePresentation.from_ideal(ring, choice.elements)
    resolution = minimal_free_resolution(quotient, 5)
    profiles, witnesses = _infinite_or_witness(quotient, resolution, [5])
    witness['syzygy'] = profiles[0].to_data()
    witness['finite'] = witnesses
    return CheckResult('syz5', describe(ring, quotient), SATISFIED,
                       _conclusion(witnesses), witness)


def check_dim2_sigma_identity(ring, module, i, x2=None):
    """lambda(Syz_(i+1) M) = sigma_i(M, R/x_2 R) in dimension 2, checked only
    when Syz_(i+1) M turns out to have finite length."""
    if ring.dimension != 2:
        raise HypothesisFails('the ring has dimension %d, not 2'
                              % ring.dimension, dimension=ring.dimension)
    _require_finite_length(module)
    resolution = minimal_free_resolution(module, i + 1)
    profile = syzygy_profile(resolution, i + 1)
    witness = {'syzygy': profile.to_data()}
    if not profile.finite or profile.is_zero:
        return CheckResult.vacuous('dim2-sigma', describe(ring, module),
                                   witness)
    if x2 is None:
        x2 = choose_parameters(ring).elements[1]
    value = sigma(module, ModulePresentation.from_ideal(ring, [x2]), i)
    witness.update({'element': str(x2), 'sigma': str(value)})
    holds = value == profile.length
    if not holds:
        witness['finite'] = [_confirm_finite(module, i + 1, resolution,
                                             profile)]
    return CheckResult('dim2-sigma', describe(ring, module), SATISFIED,
                       VERIFIED if holds else REFUTED, witness)


VERIFIERS = {
    'big-socle': check_big_socle,
    'dim2': check_dim2_syzygies,
    'bad-to-good': check_bad_to_good,
    'even-index': check_even_index,
    'syz5': check_syz5_parameter,
    'dim2-sigma': check_dim2_sigma_identity,
    'depth-band': check_syzygy_depth_band,
}


def guard_failure(name, ring, module, error):
    """A CheckResult recording a HypothesisFails raised by a checker."""
    try:
        instance = describe(ring, module)
    except InfiniteLength:
        instance = {'ring': ring.summary(),
                    'module_generators': len(module.generator_twists),
                    'module_length': None}
    return CheckResult(name, instance, FAILED, NOT_APPLICABLE,
                       error.as_record())
