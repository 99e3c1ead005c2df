import pickle
from test.support.import_helper import import_fresh_module
from test.support.os_helper import EnvironmentVarGuard

from django.test import SimpleTestCase

from base.exceptions import AlgebraError
from base.exceptions import CapExceeded
from base.exceptions import DelayedException
from base.exceptions import HypothesisFails
from base.exceptions import InvalidInput
from base.exceptions import NotMonomial
from base.exceptions import NotPrime
from base.exceptions import SpecParseError
from base.exceptions import UnknownJob


SETTINGS_MODULES = ['settings.base', 'settings.project', 'settings.dev']


class AlgebraErrorTest(SimpleTestCase):
    def test_exit_codes(self):
        self.assertEqual(HypothesisFails('no').exit_code, 2)
        self.assertEqual(NotMonomial('no').exit_code, 2)
        self.assertEqual(CapExceeded('no').exit_code, 3)
        self.assertEqual(AlgebraError('no').exit_code, 3)
        self.assertEqual(SpecParseError('no').exit_code, 4)
        self.assertEqual(UnknownJob('no').exit_code, 4)
        self.assertEqual(NotPrime('no').exit_code, 4)

    def test_invalid_input_is_an_engine_error(self):
        error = InvalidInput('unit ideal')
        self.assertEqual(error.exit_code, 3)
        self.assertIsInstance(error, ValueError)

    def test_record(self):
        error = CapExceeded('too many steps', cap=12)
        self.assertEqual(error.as_record(), {
            'error': 'CapExceeded',
            'category': 'engine',
            'message': 'too many steps',
            'details': {'cap': '12'},
        })

    def test_record_without_details(self):
        record = HypothesisFails('the ring has depth 1').as_record()
        self.assertNotIn('details', record)
        self.assertEqual(record['category'], 'guard')

    def test_parse_error_location(self):
        error = SpecParseError('unknown variable z', line=3, column=7)
        self.assertEqual(error.message,
                         'unknown variable z (line 3, column 7)')
        self.assertEqual((error.line, error.column), (3, 7))
        self.assertEqual(str(SpecParseError('empty file')), 'empty file')


class DelayedExceptionTest(SimpleTestCase):
    def _delayed(self):
        try:
            raise CapExceeded('resolution needs more steps')
        except CapExceeded as e:
            return DelayedException(e)

    def test_re_raise(self):
        delayed = self._delayed()
        with self.assertRaises(CapExceeded) as raised:
            delayed.re_raise()
        self.assertEqual(raised.exception.message,
                         'resolution needs more steps')

    def test_survives_pickling(self):
        delayed = pickle.loads(pickle.dumps(self._delayed()))
        self.assertIsNotNone(delayed.traceback)
        with self.assertRaisesMessage(CapExceeded,
                                      'resolution needs more steps'):
            delayed.re_raise()


class SettingsTest(SimpleTestCase):
    def setUp(self):
        self.env = EnvironmentVarGuard()

    def test_dev(self):
        with self.env:
            self.env.set('FROBSYZ_MODE', 'dev')
            self.env.unset('FROBSYZ_CACHE_DIR')
            settings = import_fresh_module('settings', fresh=SETTINGS_MODULES)

            self.assertTrue(settings.DEBUG)
            self.assertEqual(settings.CACHES['results']['BACKEND'],
                             'django.core.cache.backends.dummy.DummyCache')

    def test_test(self):
        with self.env:
            self.env.set('FROBSYZ_MODE', 'test')
            settings = import_fresh_module('settings', fresh=SETTINGS_MODULES)

            self.assertFalse(settings.DEBUG)
            self.assertEqual(settings.FROBSYZ_SEARCH_WORKERS, 1)
            self.assertIsNone(settings.FROBSYZ_CACHE_DIR)

    def test_cache_dir(self):
        with self.env:
            self.env.set('FROBSYZ_MODE', 'dev')
            self.env.set('FROBSYZ_CACHE_DIR', '/tmp/frobsyz-cache')
            settings = import_fresh_module('settings', fresh=SETTINGS_MODULES)

            self.assertEqual(settings.CACHES['results']['LOCATION'],
                             '/tmp/frobsyz-cache')
