"""Bounded sweep for finite-length syzygies over a family of monomial rings.

Instances are surveyed independently, inline or on a process pool; the
catalog is sorted on the canonical form of each instance so that it does
not depend on the order in which workers finish.
"""
import itertools
import json
import logging
import multiprocessing as mp

from django.conf import settings

from base.exceptions import AlgebraError
from base.exceptions import DelayedException
from base.exceptions import InvalidInput
from resolutions.minimal import minimal_free_resolution
from resolutions.minimal import syzygy_profile
from theorems.corpus import build_instance


logger = logging.getLogger(__name__)


def instance_key(data):
    return json.dumps(data, sort_keys=True)


def survey_instance(data, bound):
    """Syzygy profiles of one instance; runs inside a worker process.

    Engine errors become part of the entry, anything else is carried back
    to the parent as a DelayedException.
    """
    try:
        ring, module = build_instance(data)
        d = ring.dimension
        resolution = minimal_free_resolution(module, bound)
        pd = resolution.projective_dimension()
        profiles = [syzygy_profile(resolution, i)
                    for i in range(1, bound + 1)]
        flags = []
        if pd is None:
            flags = [{'i': p.i, 'length': str(p.length)} for p in profiles
                     if p.finite and not p.is_zero and p.i >= d + 1]
        return {
            'instance': data,
            'dimension': d,
            'projective_dimension': pd,
            'syzygies': [p.to_data() for p in profiles],
            'flags': flags,
        }
    except AlgebraError as e:
        return {'instance': data, 'error': e.as_record()}
    except Exception as e:
        return {'instance': data, 'exception': DelayedException(e)}


class Catalog(object):
    def __init__(self, family, bound, entries):
        self.family = family
        self.bound = bound
        self.entries = sorted(entries,
                              key=lambda e: instance_key(e['instance']))

    @property
    def flagged(self):
        return [e for e in self.entries if e.get('flags')]

    @property
    def errors(self):
        return [e for e in self.entries if 'error' in e]

    def to_data(self):
        return self.entries

    def __len__(self):
        return len(self.entries)


def search_finite_syzygies(family, bound, workers=None):
    """Survey every instance of ``family`` up to Syz_bound."""
    if bound < 1:
        raise InvalidInput('bound must be at least 1', bound=bound)
    if workers is None:
        workers = getattr(settings, 'FROBSYZ_SEARCH_WORKERS', 1)
    arguments = [(data, bound) for data in family.instances()]
    logger.info('surveying %d instances with %d worker(s)', len(arguments),
                workers)
    if workers == 1 or len(arguments) < 2:
        entries = list(itertools.starmap(survey_instance, arguments))
    else:
        context = mp.get_context('spawn')
        with context.Pool(processes=workers) as pool:
            entries = pool.starmap(survey_instance, arguments)
    for entry in entries:
        if 'exception' in entry:
            entry['exception'].re_raise()
        if 'error' in entry:
            logger.warning('instance %s: %s', instance_key(entry['instance']),
                           entry['error']['message'])
    catalog = Catalog(family, bound, entries)
    for entry in catalog.flagged:
        logger.warning('finite syzygy at %s: %s',
                       instance_key(entry['instance']), entry['flags'])
    return catalog
