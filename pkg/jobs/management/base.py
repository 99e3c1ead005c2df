import io

from django.conf import settings
from django.core.management.base import BaseCommand
from django.core.management.base import CommandError

from base.exceptions import AlgebraError
from base.exceptions import EXIT_CODES
from base.exceptions import PARSE
from jobs.cache import ArtifactCache
from jobs.cache import result_cache
from jobs.emit import FORMATS
from jobs.emit import emit
from jobs.runner import run_job
from jobs.specfile import parse_job
from jobs.specfile import parse_spec


def read_spec(path):
    try:
        with io.open(path, encoding='utf-8') as f:
            text = f.read()
    except (IOError, UnicodeDecodeError) as e:
        raise CommandError('cannot read %s: %s' % (path, e),
                           returncode=EXIT_CODES[PARSE])
    try:
        return parse_spec(text)
    except AlgebraError as e:
        raise CommandError('%s: %s' % (path, e.message),
                           returncode=e.exit_code)


class SpecCommand(BaseCommand):
    """A command that runs one job and writes its ResultDocument.

    Subclasses name the operation in ``op``; the job arguments come from
    the command line in spec-file job syntax (``M i=1..3``).
    """
    op = None
    needs_spec = True

    def add_arguments(self, parser):
        if self.needs_spec:
            parser.add_argument('spec', help='Path of the spec file')
        else:
            parser.add_argument('--spec', help='Path of a spec file')
        parser.add_argument('arguments', nargs='*',
                            help='Job arguments, e.g. M i=1..3')
        add_run_options(parser)

    def handle(self, *args, **options):
        spec = read_spec(options['spec']) if options.get('spec') else None
        job = self.job(options)
        self.write_result(spec, job, None, options)

    def job(self, options):
        try:
            return parse_job(self.op, ' '.join(options['arguments']))
        except AlgebraError as e:
            raise CommandError(e.message, returncode=e.exit_code)

    def write_result(self, spec, job, name, options):
        cache = ArtifactCache(result_cache(options.get('cache_dir') or
                                           settings.FROBSYZ_CACHE_DIR))
        try:
            doc = run_job(spec, name=name, job=job, cache=cache,
                          steps=options.get('steps'),
                          emax=options.get('emax'),
                          seed=options.get('seed'))
        except AlgebraError as e:
            raise CommandError(e.message, returncode=e.exit_code)
        self.stdout.write(emit(doc, options['format'],
                               include_timing=options['timing']
                               ).decode('utf-8'), ending='')
        if int(options.get('verbosity', 1)) > 1:
            self.stderr.write('cache: %d hit(s), %d miss(es), %d discarded'
                              % (cache.hits, cache.misses, cache.discarded))
        if doc.exit_code:
            raise CommandError(doc.error['message'],
                               returncode=doc.exit_code)


def add_run_options(parser):
    parser.add_argument('--format', choices=FORMATS, default='json',
                        help='Output format')
    parser.add_argument('--cache-dir', dest='cache_dir',
                        help='Cache directory (overrides FROBSYZ_CACHE_DIR)')
    parser.add_argument('--steps', type=int,
                        help='Resolution steps for resolve and euler jobs')
    parser.add_argument('--emax', type=int,
                        help='Largest Frobenius level to sample')
    parser.add_argument('--seed', type=int,
                        help='Seed for random searches (default: from the '
                             'spec hash)')
    parser.add_argument('--timing', action='store_true', default=False,
                        help='Include timing and cache counters')
