"""
Django settings for the frobsyz project.
This file lists Django settings shared by every environment. Engine knobs
live in settings/project.py. Never import this or any other settings file
directly unless you are sure you do not need the env-specific settings.
"""

import os

# Determine the path of your local workspace.
WORKSPACE_DJANGO_ROOT = os.path.abspath(
    os.path.dirname(os.path.dirname(globals()['__file__'])))

DEBUG = False

# There is no web surface; the key only satisfies Django's startup checks.
SECRET_KEY = os.getenv('FROBSYZ_SECRET_KEY', 'frobsyz-insecure-local-key')

DATABASES = {}

TIME_ZONE = 'UTC'
LANGUAGE_CODE = 'en'
USE_I18N = False
USE_TZ = True

TEMPLATES = [
    {
        'BACKEND': 'django.template.backends.django.DjangoTemplates',
        'DIRS': [],
        'APP_DIRS': True,
        'OPTIONS': {},
    },
]

# Use a default local memory cache
CACHES = {
    'default': {
        'BACKEND': 'django.core.cache.backends.locmem.LocMemCache',
    },
}

# All projects that we write (and thus, need to be tested) should go here.
PROJECT_APPS = [
    'base',
    'core_algebra',
    'groebner',
    'resolutions',
    'frobenius',
    'tor_sigma',
    'theorems',
    'jobs',
]

# This is the actual variable that django looks at.
INSTALLED_APPS = PROJECT_APPS

LOG_LEVEL = os.getenv('FROBSYZ_LOG_LEVEL', 'WARNING')

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '%(levelname)s %(name)s: %(message)s',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'verbose',
        },
    },
    'loggers': dict(
        (app, {'handlers': ['console'], 'level': LOG_LEVEL,
               'propagate': True})
        for app in PROJECT_APPS),
}


###############################################################################
# Import any extra settings to override default settings.
###############################################################################
# pylint: disable=W0401,W0614
from .project import *

# A second cache backend holds resolutions and Groebner bases, so that the
# default cache can be disabled in tests independently of it.
if FROBSYZ_CACHE_DIR:
    CACHES['results'] = {
        'BACKEND': 'django.core.cache.backends.filebased.FileBasedCache',
        'LOCATION': FROBSYZ_CACHE_DIR,
        'TIMEOUT': None,
    }
else:
    CACHES['results'] = {
        'BACKEND': 'django.core.cache.backends.dummy.DummyCache',
    }
