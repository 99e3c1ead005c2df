import io
import json
import os
import shutil
import tempfile
from fractions import Fraction

import mock
from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase

from base.exceptions import SpecParseError
from base.exceptions import UnknownJob
from frobenius.estimates import format_rational
from jobs.cache import ArtifactCache
from jobs.cache import NoCache
from jobs.cache import result_cache
from jobs.cache import ring_key_data
from jobs.emit import emit
from jobs.runner import run_job
from jobs.specfile import parse_job
from jobs.specfile import parse_spec
from resolutions.minimal import minimal_free_resolution


E1_SPEC = """\
# the ring with a finite second syzygy
p = 2; vars = x, y;
ideal I = x^2, x*y;
module M = quotient y;
module k = quotient x, y;
job s = syzlen M i=2;
job f = fbetti M i=0..2 emax=3;
job d = verify dim2 M;
job t = tor M k i=2;
job g = sigma M k i=1..2;
job b = syzlen M;
"""

UNIT_SPEC = """\
p = 2; vars = x, y;
ideal I = x, 1;
module k = quotient x, y;
"""


class ParseSpecTest(SimpleTestCase):
    def test_e1(self):
        spec = parse_spec(E1_SPEC)
        self.assertEqual(spec.p, 2)
        self.assertEqual(spec.variables, ['x', 'y'])
        self.assertEqual(spec.ring_ideal, 'I')
        self.assertEqual(spec.ring.dimension, 1)
        self.assertEqual(spec.module('M').length(), 2)
        self.assertEqual(list(spec.jobs), ['s', 'f', 'd', 't', 'g', 'b'])

    def test_canonical_text(self):
        spec = parse_spec('p=2; vars=x,y; ideal I = x^2, x*y; '
                          'module M = quotient y; job s = syzlen M i=2')
        self.assertEqual(spec.canonical_text(),
                         'p = 2;\n'
                         'vars = x, y;\n'
                         'ideal I = x^2, x*y;\n'
                         'module M = quotient y;\n'
                         'job s = syzlen M i=2;\n')

    def test_print_parse_identity(self):
        spec = parse_spec(E1_SPEC)
        again = parse_spec(spec.canonical_text())
        self.assertEqual(again, spec)
        self.assertEqual(again.canonical_text(), spec.canonical_text())
        self.assertEqual(again.digest(), spec.digest())

    def test_non_prime_characteristic(self):
        with self.assertRaises(SpecParseError) as cm:
            parse_spec('p = 4; vars = x, y;')
        self.assertEqual(cm.exception.line, 1)
        self.assertEqual(cm.exception.category, 'parse')

    def test_non_homogeneous_generator(self):
        with self.assertRaises(SpecParseError) as cm:
            parse_spec('p = 2; vars = x, y;\nideal I = x^2 + y;')
        self.assertEqual(cm.exception.line, 2)
        self.assertEqual(cm.exception.details['term'], 'y')

    def test_syntax_error_position(self):
        with self.assertRaises(SpecParseError) as cm:
            parse_spec('p = 2; vars = x, y;\nideal I = x^^2;')
        self.assertEqual(cm.exception.line, 2)

    def test_unknown_variable(self):
        self.assertRaises(SpecParseError, parse_spec,
                          'p = 2; vars = x, y; ideal I = z^2;')

    def test_header_comes_first(self):
        self.assertRaises(SpecParseError, parse_spec,
                          'p = 2; vars = x; ideal I = x^2; p = 3;')

    def test_powers_of_named_ideals(self):
        spec = parse_spec('p = 2; vars = x, y; ideal I = x^2, x*y; '
                          'ideal J = m^2; module N = coker [[x, y]];')
        self.assertEqual(len(spec.ideal('J').minimal_generators()), 3)
        self.assertEqual(str(spec.modules['N']), 'coker [[x, y]]')
        self.assertEqual(spec.module('N').length(), 1)

    def test_job_arguments(self):
        job = parse_job('fbetti', 'M i=0..2 emax=3')
        self.assertEqual(job.positional, ['M'])
        self.assertEqual(str(job.option('i')), '0..2')
        self.assertEqual(job.option('emax'), '3')
        self.assertEqual(str(job), 'fbetti M i=0..2 emax=3')


class RunJobTest(SimpleTestCase):
    def setUp(self):
        self.spec = parse_spec(E1_SPEC)

    def test_syzlen(self):
        doc = run_job(self.spec, 's')
        self.assertEqual(doc.exit_code, 0)
        self.assertEqual(doc.tables['syzygies'],
                         [{'i': 2, 'finite': True, 'length': '1',
                           'dimension': 0}])

    def test_fbetti_ratio_table(self):
        doc = run_job(self.spec, 'f')
        estimates = doc.tables['estimates']
        self.assertEqual([e['i'] for e in estimates], [0, 1, 2])
        self.assertEqual([s['ratio'] for s in estimates[0]['samples']],
                         ['2', '3/2', '5/4', '9/8'])
        self.assertEqual([s['length'] for s in estimates[0]['samples']],
                         ['2', '3', '5', '9'])

    def test_guard_failure(self):
        doc = run_job(self.spec, 'd')
        self.assertEqual(doc.exit_code, 2)
        self.assertEqual(doc.error['error'], 'HypothesisFails')
        self.assertEqual(doc.tables['check']['hypothesis'], 'failed')
        self.assertEqual(doc.tables['check']['conclusion'], 'not-applicable')

    def test_tor_and_sigma(self):
        self.assertEqual(run_job(self.spec, 't').tables['tor'],
                         [{'j': 0, 'length': '1'}, {'j': 1, 'length': '1'},
                          {'j': 2, 'length': '1'}])
        self.assertEqual(run_job(self.spec, 'g').tables['sigma'],
                         [{'i': 1, 'value': '0'}, {'i': 2, 'value': '-1'}])

    def test_bad_arguments_are_parse_errors(self):
        doc = run_job(self.spec, 'b')
        self.assertEqual(doc.exit_code, 4)
        self.assertEqual(doc.error['category'], 'parse')

    def test_unknown_job(self):
        self.assertRaises(UnknownJob, run_job, self.spec, 'nope')
        self.assertRaises(UnknownJob, run_job, self.spec,
                          job=parse_job('frobnicate', 'M'))

    def test_explicit_job_and_seed(self):
        doc = run_job(self.spec, job=parse_job('syzlen', 'M i=1..3'))
        self.assertEqual([row['finite'] for row in doc.tables['syzygies']],
                         [False, True, False])
        self.assertEqual(doc.job['seed'], self.spec.seed())
        self.assertEqual(run_job(self.spec, 's', seed=7).job['seed'], 7)

    def test_search_without_spec(self):
        doc = run_job(None, job=parse_job('search', 'nvars=1 degree=2..2'))
        self.assertEqual(doc.tables['catalog'], [])
        self.assertEqual(doc.tables['flagged'], 0)

    def test_unit_ideal_is_an_engine_error(self):
        spec = parse_spec(UNIT_SPEC)
        doc = run_job(spec, job=parse_job('syzlen', 'k i=1'))
        self.assertEqual(doc.exit_code, 3)
        self.assertEqual(doc.error['error'], 'InvalidInput')
        self.assertEqual(doc.error['category'], 'engine')

    @mock.patch.dict('jobs.runner.OPERATIONS',
                     {'syzlen': mock.Mock(side_effect=ValueError('bad'))})
    def test_value_errors_become_records(self):
        doc = run_job(self.spec, 's')
        self.assertEqual(doc.exit_code, 3)
        self.assertEqual(doc.error['message'], 'bad')


class EmitTest(SimpleTestCase):
    def setUp(self):
        self.doc = run_job(parse_spec(E1_SPEC), 's')

    def test_deterministic(self):
        for fmt in ('json', 'csv', 'text'):
            self.assertEqual(emit(self.doc, fmt), emit(self.doc, fmt))

    def test_timing_left_out(self):
        self.assertNotIn(b'timing', emit(self.doc))
        self.assertIn(b'timing', emit(self.doc, include_timing=True))

    def test_json(self):
        data = json.loads(emit(self.doc).decode('utf-8'))
        self.assertEqual(data['tables']['syzygies'][0]['length'], '1')
        self.assertIsNone(data['error'])
        self.assertTrue(emit(self.doc).endswith(b'\n'))

    def test_empty_catalog(self):
        self.assertEqual(emit([]), b'[]\n')

    def test_rationals(self):
        data = {'ratios': [format_rational(Fraction(6, 1)),
                           format_rational(Fraction(14, 8))]}
        self.assertEqual(json.loads(emit(data).decode('utf-8')),
                         {'ratios': ['6', '7/4']})

    def test_csv_sections(self):
        text = emit(self.doc, 'csv').decode('utf-8')
        self.assertIn('# job\n', text)
        self.assertIn('# syzygies\ndimension,finite,i,length\n0,true,2,1\n',
                      text)

    def test_text(self):
        text = emit(self.doc, 'text').decode('utf-8')
        self.assertIn('job s: syzlen M i=2', text)
        self.assertIn('[syzygies]', text)
        self.assertIn('length=1', text)

    def test_unknown_format(self):
        self.assertRaises(ValueError, emit, self.doc, 'xml')


class CacheTest(SimpleTestCase):
    def setUp(self):
        self.directory = tempfile.mkdtemp()
        self.spec = parse_spec(E1_SPEC)
        self.M = self.spec.module('M')

    def tearDown(self):
        shutil.rmtree(self.directory)

    def cache(self):
        return ArtifactCache(result_cache(self.directory))

    def test_second_run_hits(self):
        first = self.cache()
        resolution = first.resolution(self.M, 3)
        self.assertEqual((first.hits, first.misses), (0, 2))
        spec = parse_spec(E1_SPEC)
        second = self.cache()
        reloaded = second.resolution(spec.module('M'), 3)
        self.assertEqual((second.hits, second.misses), (2, 0))
        self.assertEqual(reloaded, resolution)

    def test_corrupt_entry_discarded(self):
        cache = self.cache()
        cache.resolution(self.M, 3)
        key = cache.key('resolution', ring_key_data(self.spec.ring),
                        self.M.matrix.to_data(), 3)
        cache.backend.set(key, 'not json', None)
        with self.assertLogs('jobs.cache', 'WARNING'):
            resolution = cache.resolution(self.M, 3)
        self.assertEqual(cache.discarded, 1)
        self.assertEqual(resolution, minimal_free_resolution(self.M, 3))

    def test_tampered_resolution_discarded(self):
        cache = self.cache()
        cache.resolution(self.M, 3)
        key = cache.key('resolution', ring_key_data(self.spec.ring),
                        self.M.matrix.to_data(), 3)
        data = json.loads(cache.backend.get(key))
        data['maps'][0]['entries'][0][0] = []
        cache.backend.set(key, json.dumps(data), None)
        with self.assertLogs('jobs.cache', 'WARNING'):
            resolution = cache.resolution(self.M, 3)
        self.assertEqual(cache.discarded, 1)
        self.assertEqual(resolution, minimal_free_resolution(self.M, 3))

    def test_tampered_basis_discarded(self):
        cache = self.cache()
        cache.ring_basis(self.spec.ring)
        key = cache.key('basis', ring_key_data(self.spec.ring))
        cache.backend.set(key, json.dumps({'degrees': [0],
                                           'generators': []}), None)
        ring = parse_spec(E1_SPEC).ring
        with self.assertLogs('jobs.cache', 'WARNING'):
            gb = cache.ring_basis(ring)
        self.assertEqual(gb, self.spec.ring.gb)

    def test_transparency(self):
        for name in ('s', 'f', 'd', 't', 'g'):
            plain = emit(run_job(parse_spec(E1_SPEC), name, cache=NoCache()))
            cold = emit(run_job(parse_spec(E1_SPEC), name,
                                cache=self.cache()))
            warm = emit(run_job(parse_spec(E1_SPEC), name,
                                cache=self.cache()))
            self.assertEqual(plain, cold)
            self.assertEqual(plain, warm)


class CommandTest(SimpleTestCase):
    def setUp(self):
        handle, self.path = tempfile.mkstemp(suffix='.spec')
        with os.fdopen(handle, 'w') as f:
            f.write(E1_SPEC)

    def tearDown(self):
        os.remove(self.path)

    def call(self, *args, **options):
        out = io.StringIO()
        call_command(*args, stdout=out, stderr=io.StringIO(), **options)
        return out.getvalue()

    def test_checkspec(self):
        self.assertTrue(self.call('checkspec', self.path).startswith(
            'ok p=2 vars=x,y ideals=1 modules=2 jobs=6'))

    def test_printspec(self):
        self.assertEqual(self.call('printspec', self.path),
                         parse_spec(E1_SPEC).canonical_text())

    def test_syzlen(self):
        data = json.loads(self.call('syzlen', self.path, 'M', 'i=2'))
        self.assertEqual(data['tables']['syzygies'][0]['length'], '1')

    def test_text_format(self):
        self.assertIn('[syzygies]', self.call('syzlen', self.path, 'M', 'i=2',
                                              format='text'))

    def test_runjob(self):
        data = json.loads(self.call('runjob', self.path, 't'))
        self.assertEqual(len(data['tables']['tor']), 3)

    def test_guard_exit_code(self):
        with self.assertRaises(CommandError) as cm:
            self.call('verify', self.path, 'dim2', 'M')
        self.assertEqual(cm.exception.returncode, 2)

    def test_parse_exit_code(self):
        with open(self.path, 'w') as f:
            f.write('p = 4; vars = x;')
        with self.assertRaises(CommandError) as cm:
            self.call('checkspec', self.path)
        self.assertEqual(cm.exception.returncode, 4)

    def test_engine_exit_code(self):
        with self.assertRaises(CommandError) as cm:
            self.call('resolve', self.path, 'M', steps=50)
        self.assertEqual(cm.exception.returncode, 3)

    def test_engine_error_record_written(self):
        with open(self.path, 'w') as f:
            f.write(UNIT_SPEC)
        out = io.StringIO()
        with self.assertRaises(CommandError) as cm:
            call_command('syzlen', self.path, 'k', 'i=1', stdout=out,
                         stderr=io.StringIO())
        self.assertEqual(cm.exception.returncode, 3)
        error = json.loads(out.getvalue())['error']
        self.assertEqual(error['error'], 'InvalidInput')
        self.assertEqual(error['category'], 'engine')

    def test_search(self):
        data = json.loads(self.call('search', 'nvars=1', 'degree=2..2'))
        self.assertEqual(data['tables']['catalog'], [])

    def test_cache_dir_flag(self):
        directory = tempfile.mkdtemp()
        try:
            first = self.call('syzlen', self.path, 'M', 'i=2',
                              cache_dir=directory)
            second = self.call('syzlen', self.path, 'M', 'i=2',
                               cache_dir=directory)
        finally:
            shutil.rmtree(directory)
        self.assertEqual(first, second)
        self.assertEqual(first, self.call('syzlen', self.path, 'M', 'i=2'))
