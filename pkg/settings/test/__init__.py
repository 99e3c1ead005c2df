"""Default settings for running tests."""

# pylint: disable=W0401,W0614
from settings.dev import *

DEBUG = False

# Use dummy caches during testing; cache tests build their own backends
CACHES['default'] = {
    'BACKEND': 'django.core.cache.backends.dummy.DummyCache',
}
CACHES['results'] = {
    'BACKEND': 'django.core.cache.backends.dummy.DummyCache',
}
FROBSYZ_CACHE_DIR = None

# Keep accidental deep resolutions short.
FROBSYZ_STEP_CAP = 8
FROBSYZ_SEARCH_WORKERS = 1
