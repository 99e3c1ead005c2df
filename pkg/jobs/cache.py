"""Content-addressed storage of resolutions and ring Groebner bases.

Entries are JSON text in a Django cache backend, keyed by a sha256 of the
engine version and the data that determines the artifact. Every reload is
re-verified before use; an entry that fails verification is discarded with
a warning and the artifact is recomputed.
"""
import hashlib
import json
import logging

from django.conf import settings
from django.core.cache import caches
from django.core.cache.backends.filebased import FileBasedCache

from base.exceptions import AlgebraError
from groebner.basis import GroebnerBasis
from resolutions.complexes import FreeComplex
from resolutions.minimal import minimal_free_resolution
from resolutions.minimal import minimize_presentation


logger = logging.getLogger(__name__)

RELOAD_ERRORS = (AlgebraError, ValueError, KeyError, TypeError, IndexError)


def result_cache(cache_dir=None):
    """The backend behind an ArtifactCache: a FileBasedCache in
    ``cache_dir`` if given, else the configured ``results`` alias."""
    if cache_dir:
        return FileBasedCache(cache_dir, {'TIMEOUT': None})
    return caches['results']


def ring_key_data(ring):
    ambient = ring.ambient
    return {'p': ambient.characteristic,
            'variables': list(ambient.variables),
            'order': ambient.order,
            'ideal': [str(g) for g in ring.ideal.generators]}


class ArtifactCache(object):
    def __init__(self, backend=None):
        self.backend = backend if backend is not None else result_cache()
        self.hits = 0
        self.misses = 0
        self.discarded = 0

    def key(self, kind, *parts):
        payload = json.dumps([settings.FROBSYZ_ENGINE_VERSION, kind,
                              list(parts)], sort_keys=True)
        return 'frobsyz:%s:%s' % (
            kind, hashlib.sha256(payload.encode('utf-8')).hexdigest())

    def _load(self, key, rebuild):
        text = self.backend.get(key)
        if text is None:
            self.misses += 1
            logger.debug('cache miss %s', key)
            return None
        try:
            value = rebuild(json.loads(text))
        except RELOAD_ERRORS + (json.JSONDecodeError,) as e:
            self.discarded += 1
            logger.warning('discarding cache entry %s: %s', key, e)
            self.backend.delete(key)
            return None
        self.hits += 1
        logger.debug('cache hit %s', key)
        return value

    def _store(self, key, data):
        self.backend.set(key, json.dumps(data, sort_keys=True), None)

    def ring_basis(self, ring):
        """Install a Groebner basis of the defining ideal of ``ring``."""
        key = self.key('basis', ring_key_data(ring))

        def rebuild(data):
            ring.ideal.adopt_basis(GroebnerBasis.from_data(ring.ambient, data))
            return ring.gb

        gb = self._load(key, rebuild)
        if gb is None:
            gb = ring.gb
            self._store(key, gb.to_data())
        return gb

    def resolution(self, module, steps):
        """minimal_free_resolution(module, steps), through the cache."""
        ring = module.ring
        self.ring_basis(ring)
        key = self.key('resolution', ring_key_data(ring),
                       module.matrix.to_data(), steps)

        def rebuild(data):
            complex_ = FreeComplex.from_data(ring, data)
            if complex_.length != steps:
                raise ValueError('stored resolution has %d steps, not %d'
                                 % (complex_.length, steps))
            if not complex_.is_minimal():
                raise ValueError('stored resolution is not minimal')
            presentation = minimize_presentation(module.matrix)
            if complex_.module(0) != presentation.target or (
                    steps and complex_.phi(1) != presentation):
                raise ValueError('stored resolution resolves another module')
            return complex_

        resolution = self._load(key, rebuild)
        if resolution is None:
            resolution = minimal_free_resolution(module, steps)
            self._store(key, resolution.to_data())
        return resolution


class NoCache(object):
    """Stands in for ArtifactCache when no cache is wanted."""
    hits = misses = discarded = 0

    def ring_basis(self, ring):
        return ring.gb

    def resolution(self, module, steps):
        return minimal_free_resolution(module, steps)
