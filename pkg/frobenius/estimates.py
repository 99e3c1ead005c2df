"""Frobenius Betti estimates from finitely many Frobenius levels.

The limit of lambda(H_i(F^e(G))) / q^d cannot be read off finitely many
levels, so an estimate carries one of four verdicts:

* exact-zero: every sampled length with e >= 1 is zero;
* positive: every ratio with e >= 1 is at least half the last one, which is
  positive, and either the last three ratios do not decrease or the
  polynomial in q of degree d through the last d + 1 lengths has a positive
  leading coefficient;
* decaying: the last three lengths are positive and grow by at most a factor
  p^(d - 1/2) per level;
* inconclusive: anything else.
"""
from fractions import Fraction

from frobenius.functor import default_e_max
from frobenius.functor import frobenius_homology_lengths
from resolutions.minimal import minimal_free_resolution
from resolutions.rings import is_cohen_macaulay


EXACT_ZERO = 'exact-zero'
POSITIVE = 'positive'
DECAYING = 'decaying'
INCONCLUSIVE = 'inconclusive'


def format_rational(value):
    """'6' for 6/1, '7/4' for 14/8."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return '%d/%d' % (value.numerator, value.denominator)


class Sample(object):
    __slots__ = ('e', 'length', 'ratio')

    def __init__(self, e, length, ratio):
        self.e = e
        self.length = length
        self.ratio = ratio

    def to_data(self):
        return {'e': self.e, 'length': str(self.length),
                'ratio': format_rational(self.ratio)}

    def __repr__(self):
        return '<Sample e=%d length=%d ratio=%s>' % (
            self.e, self.length, format_rational(self.ratio))


def leading_coefficient(samples, p, d):
    """Leading coefficient of the polynomial in q of degree d through the
    last d + 1 samples, or None when there are fewer samples."""
    if len(samples) < d + 1:
        return None
    points = samples[len(samples) - d - 1:]
    qs = [p ** s.e for s in points]
    values = [Fraction(s.length) for s in points]
    for order in range(1, d + 1):
        values = [(b - a) / (qs[k + order] - qs[k])
                  for k, (a, b) in enumerate(zip(values, values[1:]))]
    return values[0]


def classify(samples, p, d):
    tail = [s for s in samples if s.e >= 1]
    if not tail:
        return INCONCLUSIVE
    if all(s.length == 0 for s in tail):
        return EXACT_ZERO
    if len(tail) < 2:
        return INCONCLUSIVE
    last = tail[-3:]
    floor = tail[-1].ratio / 2
    if floor > 0 and all(s.ratio >= floor for s in tail):
        if all(a.ratio <= b.ratio for a, b in zip(last, last[1:])):
            return POSITIVE
        # ratios falling towards the q^d coefficient of the fitted lengths
        leading = leading_coefficient(tail, p, d)
        if leading is not None and leading > 0:
            return POSITIVE
    # lambda_(e+1) <= lambda_e * p^(d - 1/2), squared to stay in integers
    if all(s.length > 0 for s in last) and all(
            b.length ** 2 * p <= a.length ** 2 * p ** (2 * d)
            for a, b in zip(last, last[1:])):
        return DECAYING
    return INCONCLUSIVE


class FBettiEstimate(object):
    def __init__(self, i, p, d, samples):
        self.i = i
        self.p = p
        self.d = d
        self.samples = list(samples)
        if any(a.e >= b.e for a, b in zip(self.samples, self.samples[1:])):
            raise ValueError('samples must be strictly increasing in e')
        self.verdict = classify(self.samples, p, d)

    @classmethod
    def from_lengths(cls, i, p, d, lengths):
        """``lengths`` lists lambda_e for e = 0, 1, 2, ..."""
        samples = [Sample(e, length, Fraction(length, p ** (e * d)))
                   for e, length in enumerate(lengths)]
        return cls(i, p, d, samples)

    @property
    def ratios(self):
        return [s.ratio for s in self.samples]

    def to_data(self):
        return {'i': self.i, 'verdict': self.verdict,
                'samples': [s.to_data() for s in self.samples]}

    def __repr__(self):
        return '<FBettiEstimate i=%d %s>' % (self.i, self.verdict)


def fbetti_estimate(module, i, e_max=None, resolution=None, table=None):
    ring = module.ring
    if table is None:
        table = frobenius_homology_lengths(module, i, e_max,
                                           resolution=resolution)
    return FBettiEstimate.from_lengths(i, ring.characteristic, ring.dimension,
                                       table.row(i))


class VanishingReport(object):
    def __init__(self, ring_summary, projective_dimension, estimates,
                 finite_pd_vanishing, windows, cm_windows, clauses,
                 conclusion):
        self.ring_summary = ring_summary
        self.projective_dimension = projective_dimension
        self.estimates = estimates
        self.finite_pd_vanishing = finite_pd_vanishing
        self.windows = windows
        self.cm_windows = cm_windows
        self.clauses = clauses
        self.conclusion = conclusion

    def to_data(self):
        return {
            'ring': self.ring_summary,
            'projective_dimension': self.projective_dimension,
            'estimates': [self.estimates[i].to_data()
                          for i in sorted(self.estimates)],
            'finite_pd_vanishing': self.finite_pd_vanishing,
            'windows': self.windows,
            'cm_windows': self.cm_windows,
            'clauses': self.clauses,
            'conclusion': self.conclusion,
        }


def _window_outcomes(estimates, indices, size):
    """Classify each run of ``size`` consecutive indices."""
    outcomes = []
    if size < 1:
        return outcomes
    for start in range(len(indices) - size + 1):
        run = indices[start:start + size]
        verdicts = [estimates[i].verdict for i in run]
        if POSITIVE in verdicts:
            outcome = 'positive'
        elif all(v == EXACT_ZERO for v in verdicts):
            outcome = 'vanishing'
        else:
            outcome = 'undetermined'
        outcomes.append({'indices': run, 'outcome': outcome})
    return outcomes


def vanishing_report(module, window=(1, 3), e_max=None):
    """Compare sampled Frobenius Betti estimates with the equivalence of
    finite projective dimension and vanishing of consecutive estimates."""
    ring = module.ring
    d = ring.dimension
    if e_max is None:
        e_max = default_e_max(ring.characteristic)
    first, last = window
    indices = list(range(first, last + 1))
    resolution = minimal_free_resolution(module, last + 1)
    table = frobenius_homology_lengths(module, last, e_max,
                                       resolution=resolution)
    estimates = dict(
        (i, FBettiEstimate.from_lengths(i, ring.characteristic, d,
                                        table.row(i)))
        for i in indices)
    pd = resolution.projective_dimension()
    cm = is_cohen_macaulay(ring)
    summary = {'dimension': d, 'depth_zero': ring.depth_zero,
               'cohen_macaulay': cm}

    finite_pd_vanishing = None
    if pd is not None:
        finite_pd_vanishing = all(
            table[(i, e)] == 0 for i in range(1, last + 1)
            for e in range(e_max + 1))
    windows = _window_outcomes(estimates, indices, d + 1)
    cm_windows = _window_outcomes(estimates, indices, d) if cm else []

    clauses = []
    if pd is not None:
        clauses.append('finite projective dimension')
    if any(w['outcome'] == 'vanishing' for w in windows):
        clauses.append('%d consecutive vanishing Frobenius Betti numbers'
                       % (d + 1))
    if cm and any(w['outcome'] == 'vanishing' for w in cm_windows):
        clauses.append('Cohen-Macaulay with %d consecutive vanishing '
                       'Frobenius Betti numbers' % d)

    if pd is not None:
        if finite_pd_vanishing:
            conclusion = ('projective dimension %d is finite and every '
                          'higher Frobenius homology length vanishes' % pd)
        else:
            conclusion = ('projective dimension %d is finite but some higher '
                          'Frobenius homology is nonzero' % pd)
    elif windows and all(w['outcome'] == 'positive' for w in windows):
        conclusion = ('projective dimension is infinite and every window of '
                      '%d consecutive indices has a positive estimate'
                      % (d + 1))
    elif any(w['outcome'] == 'vanishing' for w in windows):
        conclusion = ('projective dimension is infinite up to the step cap '
                      'yet %d consecutive estimates vanish' % (d + 1))
    else:
        conclusion = ('projective dimension is infinite up to the step cap; '
                      'some windows are undetermined at this sample size')
    return VanishingReport(summary, pd, estimates, finite_pd_vanishing,
                           windows, cm_windows, clauses, conclusion)
