"""Run the jobs of a SpecFile and assemble ResultDocuments.

A job names an operation and its arguments:

    resolve M [steps=N]             syzlen M i=A..B
    fbetti M i=A..B [emax=E]        tor M N i=K
    sigma M N i=A..B                euler M N [steps=K]
    socle                           vanishing M [window=A..B] [emax=E]
    limit M i=K [kind=nilpotent|prime] [emax=E]
    parameters [n=D]                colength M i=K [cap=C]
    identity add M y=POLY [j=J]     identity divide M i=K
    identity additivity M N1 N3 i=K [middle=N2]
    verify CHECK M [options]        search [family options] [bound=B]

Engine errors are recorded in the document instead of propagating; the
document's exit code reflects their category.
"""
import collections
import logging
import time

from django.conf import settings

from base.exceptions import AlgebraError
from base.exceptions import EXIT_CODES
from base.exceptions import HypothesisFails
from base.exceptions import InvalidInput
from base.exceptions import SpecParseError
from base.exceptions import UnknownJob
from frobenius.estimates import FBettiEstimate
from frobenius.estimates import vanishing_report
from frobenius.functor import default_e_max
from frobenius.functor import frobenius_homology_lengths
from frobenius.limits import nilpotent_limit_check
from frobenius.limits import primes_limit_check
from jobs.cache import NoCache
from jobs.grammar import Range
from resolutions.minimal import syzygy_length
from resolutions.presentations import ModulePresentation
from theorems.checks import BAD_TO_GOOD_MODES
from theorems.checks import SYZYGY_OF_RI
from theorems.checks import VERIFIERS
from theorems.checks import guard_failure
from theorems.corpus import FamilySpec
from theorems.parameters import choose_parameters
from theorems.parameters import find_good_colength_ideal
from theorems.search import search_finite_syzygies
from tor_sigma.identities import divide_check
from tor_sigma.identities import lemma_add_check
from tor_sigma.identities import sigma_additivity_check
from tor_sigma.local import socle
from tor_sigma.tor import euler_check
from tor_sigma.tor import sigma
from tor_sigma.tor import tor_table


logger = logging.getLogger(__name__)

RESOLVE_STEPS = 4


class ResultDocument(object):
    def __init__(self, job, engine_version=None):
        self.job = job
        self.engine_version = (engine_version or
                               settings.FROBSYZ_ENGINE_VERSION)
        self.tables = collections.OrderedDict()
        self.error = None
        self.timing = None

    @property
    def exit_code(self):
        if self.error is None:
            return 0
        return EXIT_CODES[self.error['category']]

    def to_data(self, include_timing=False):
        data = {'job': self.job, 'engine_version': self.engine_version,
                'tables': dict(self.tables), 'error': self.error}
        if include_timing and self.timing is not None:
            data['timing'] = self.timing
        return data


class JobContext(object):
    """A job together with the spec it reads from and the run overrides."""

    def __init__(self, spec, job, cache, steps=None, emax=None, seed=None,
                 tables=None):
        self.spec = spec
        self.job = job
        self.cache = cache
        self.steps = steps
        self.emax = emax
        self.seed = seed
        self.tables = tables if tables is not None else {}

    def positional(self, index, what):
        try:
            return str(self.job.positional[index])
        except IndexError:
            raise SpecParseError('%s needs %s' % (self.job.op, what))

    def module(self, index):
        return self.spec.module(self.positional(index, 'a module name'))

    def integer(self, key, default=None):
        value = self.job.option(key)
        if value is None:
            if default is None:
                raise SpecParseError('%s needs %s=' % (self.job.op, key))
            return default
        if isinstance(value, Range):
            raise SpecParseError('%s=%s must be a single integer'
                                 % (key, value))
        try:
            return int(value)
        except ValueError:
            raise SpecParseError('%s=%s is not an integer' % (key, value))

    def span(self, key, default=None):
        value = self.job.option(key)
        if isinstance(value, Range):
            if value.low > value.high:
                raise SpecParseError('empty range %s=%s' % (key, value))
            return value.low, value.high
        single = self.integer(key, default)
        return single, single

    def e_max(self):
        if self.emax is not None:
            return self.emax
        return self.integer('emax', default_e_max(self.spec.p))

    def element(self, key):
        value = self.job.option(key)
        return None if value is None else self.spec.element(value)


def _resolve(ctx):
    module = ctx.module(0)
    steps = ctx.steps if ctx.steps is not None else ctx.integer(
        'steps', RESOLVE_STEPS)
    resolution = ctx.cache.resolution(module, steps)
    return {
        'betti': [{'i': j, 'rank': str(g.rank), 'twists': list(g.twists)}
                  for j, g in enumerate(resolution.modules)],
        'projective_dimension': resolution.projective_dimension(),
    }


def _syzlen(ctx):
    module = ctx.module(0)
    low, high = ctx.span('i')
    if low < 1:
        raise SpecParseError('syzygy indices start at 1')
    resolution = ctx.cache.resolution(module, high + 1)
    return {'syzygies': [syzygy_length(module, i, resolution).to_data()
                         for i in range(low, high + 1)]}


def _fbetti(ctx):
    module = ctx.module(0)
    low, high = ctx.span('i')
    e_max = ctx.e_max()
    table = frobenius_homology_lengths(
        module, high, e_max, resolution=ctx.cache.resolution(module, high + 1))
    ring = module.ring
    estimates = [FBettiEstimate.from_lengths(i, ring.characteristic,
                                             ring.dimension, table.row(i))
                 for i in range(low, high + 1)]
    return {'frobenius_lengths': table.to_data()[low:],
            'estimates': [e.to_data() for e in estimates]}


def _tor(ctx):
    module, other = ctx.module(0), ctx.module(1)
    i = ctx.integer('i')
    table = tor_table(module, other, i, ctx.cache.resolution(module, i + 1))
    return {'tor': table.to_data()}


def _sigma(ctx):
    module, other = ctx.module(0), ctx.module(1)
    low, high = ctx.span('i')
    table = tor_table(module, other, high,
                      ctx.cache.resolution(module, high + 1))
    return {'tor': table.to_data(),
            'sigma': [{'i': i, 'value': str(sigma(module, other, i, table))}
                      for i in range(low, high + 1)]}


def _euler(ctx):
    module, other = ctx.module(0), ctx.module(1)
    steps = ctx.steps if ctx.steps is not None else ctx.integer('steps', 3)
    resolution = ctx.cache.resolution(module, steps)
    return {'euler': euler_check(resolution.tensor(other)).to_data()}


def _socle(ctx):
    ring = ctx.spec.ring
    return {'socle': socle(ring).to_data(),
            'h0_top_degree': ring.h0_top_degree}


def _vanishing(ctx):
    module = ctx.module(0)
    window = (1, 3)
    if ctx.job.option('window') is not None:
        window = ctx.span('window')
    return {'vanishing': vanishing_report(module, window,
                                          ctx.e_max()).to_data()}


LIMIT_CHECKS = {
    'nilpotent': nilpotent_limit_check,
    'prime': primes_limit_check,
}


def _limit(ctx):
    module = ctx.module(0)
    i = ctx.integer('i')
    kind = str(ctx.job.option('kind', 'nilpotent'))
    if kind not in LIMIT_CHECKS:
        raise SpecParseError('unknown limit kind %s' % kind)
    resolution = ctx.cache.resolution(module, i + 1)
    return {'limit': LIMIT_CHECKS[kind](resolution, i, ctx.e_max()).to_data()}


def _parameters(ctx):
    choice = choose_parameters(ctx.spec.ring, ctx.integer('n', 1),
                               seed=ctx.seed)
    return {'parameters': choice.to_data()}


def _colength(ctx):
    module = ctx.module(0)
    n, power, evidence = find_good_colength_ideal(
        module, ctx.integer('i'), ctx.integer('cap', 6))
    return {'colength': evidence}


def _identity(ctx):
    kind = ctx.positional(0, 'an identity name')
    if kind == 'add':
        y = ctx.element('y')
        if y is None:
            raise SpecParseError('identity add needs y=')
        report = lemma_add_check(ctx.spec.ring, ctx.module(1), y,
                                 ctx.integer('j', 4))
    elif kind == 'divide':
        report = divide_check(ctx.spec.ring, ctx.module(1),
                              ctx.integer('i'))
    elif kind == 'additivity':
        middle = ctx.job.option('middle')
        report = sigma_additivity_check(
            ctx.module(1), ctx.module(2), ctx.module(3),
            ctx.integer('i'),
            None if middle is None else ctx.spec.module(str(middle)))
    else:
        raise SpecParseError('unknown identity %s' % kind)
    return {'identity': report.to_data()}


def _verify_arguments(ctx, name, ring):
    if name == 'big-socle':
        if ctx.job.option('i') is None:
            return [(1, 5)]
        return [ctx.span('i')]
    if name == 'bad-to-good':
        mode = str(ctx.job.option('mode', SYZYGY_OF_RI))
        if mode not in BAD_TO_GOOD_MODES:
            raise SpecParseError('unknown mode %s' % mode)
        ideal = ctx.job.option('ideal')
        if ideal is not None:
            ideal = ctx.spec.ideal(str(ideal))
        return [mode, ctx.integer('i'), ideal]
    if name == 'even-index':
        x = ctx.element('x')
        if x is None:
            raise SpecParseError('verify even-index needs x=')
        return [x, ctx.integer('bound', 4)]
    if name == 'dim2-sigma':
        x2 = ctx.element('x2')
        if x2 is None and ring.dimension == 2:
            x2 = choose_parameters(ring, seed=ctx.seed).elements[1]
        return [ctx.integer('i'), x2]
    return []


def _verify(ctx):
    name = ctx.positional(0, 'a check name')
    if name not in VERIFIERS:
        raise UnknownJob('unknown check %s' % name, check=name)
    ring = ctx.spec.ring
    if name == 'syz5':
        ideal = ctx.job.option('ideal')
        if ideal is not None:
            elements = ctx.spec.ideal(str(ideal)).generators
        else:
            elements = choose_parameters(ring, seed=ctx.seed).elements
        module = ModulePresentation.from_ideal(ring, elements)
        arguments = [elements]
    else:
        module = ctx.module(1)
        arguments = [module] + _verify_arguments(ctx, name, ring)
    try:
        result = VERIFIERS[name](ring, *arguments)
    except HypothesisFails as e:
        ctx.tables['check'] = guard_failure(name, ring, module, e).to_data()
        raise
    return {'check': result.to_data()}


def _family(ctx):
    spec = ctx.spec
    degrees = ctx.span('degree', 2)
    modules = str(ctx.job.option('modules', 'k')).split(',')
    dimension = ctx.job.option('dimension')
    limit = ctx.job.option('limit')
    return FamilySpec(
        nvars=ctx.integer('nvars', 2), min_degree=degrees[0],
        max_degree=degrees[1],
        max_generators=ctx.integer('generators', 2),
        dimension=None if dimension is None else ctx.integer('dimension'),
        depth_zero=str(ctx.job.option('depth_zero', 'yes')) != 'no',
        modules=modules,
        limit=None if limit is None else ctx.integer('limit'),
        p=spec.p if spec is not None else 2)


def _search(ctx):
    family = _family(ctx)
    bound = ctx.integer('bound', 3)
    catalog = search_finite_syzygies(family, bound)
    return {'family': family.to_data(), 'catalog': catalog.to_data(),
            'flagged': len(catalog.flagged)}


OPERATIONS = {
    'resolve': _resolve,
    'syzlen': _syzlen,
    'fbetti': _fbetti,
    'tor': _tor,
    'sigma': _sigma,
    'euler': _euler,
    'socle': _socle,
    'vanishing': _vanishing,
    'limit': _limit,
    'parameters': _parameters,
    'colength': _colength,
    'identity': _identity,
    'verify': _verify,
    'search': _search,
}


def _echo(spec, name, job, seed):
    echo = {'name': name, 'op': job.op, 'arguments': str(job), 'seed': seed}
    if spec is not None:
        echo['spec_digest'] = spec.digest()
    return echo


def run_job(spec, name=None, job=None, cache=None, steps=None, emax=None,
            seed=None):
    """Run the job ``name`` of ``spec`` (or an explicit JobSpec) and return
    its ResultDocument.

    ``spec`` may be None only for a search job. The seed of random searches
    defaults to one derived from the spec's canonical text.
    """
    if job is None:
        if spec is None or name not in spec.jobs:
            raise UnknownJob('no job named %s' % name, job=name)
        job = spec.jobs[name]
    if job.op not in OPERATIONS:
        raise UnknownJob('unknown operation %s' % job.op, op=job.op)
    if spec is None and job.op != 'search':
        raise SpecParseError('%s needs a spec file' % job.op)
    if seed is None:
        seed = spec.seed() if spec is not None else 0
    if cache is None:
        cache = NoCache()
    doc = ResultDocument(_echo(spec, name, job, seed))
    ctx = JobContext(spec, job, cache, steps=steps, emax=emax, seed=seed,
                     tables=doc.tables)
    started = time.perf_counter()
    try:
        if spec is not None:
            cache.ring_basis(spec.ring)
        doc.tables.update(OPERATIONS[job.op](ctx))
    except AlgebraError as e:
        logger.info('job %s stopped: %s', name or job.op, e.message)
        doc.error = e.as_record()
    except ValueError as e:
        logger.warning('job %s rejected its input: %s', name or job.op, e)
        doc.error = InvalidInput(str(e)).as_record()
    doc.timing = {'seconds': '%.3f' % (time.perf_counter() - started),
                  'cache_hits': str(cache.hits),
                  'cache_misses': str(cache.misses)}
    return doc
