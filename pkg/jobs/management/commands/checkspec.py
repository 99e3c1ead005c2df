from django.core.management.base import BaseCommand

from jobs.management.base import read_spec


class Command(BaseCommand):
    help = 'Parse a spec file and report what it defines.'

    def add_arguments(self, parser):
        parser.add_argument('spec', help='Path of the spec file')

    def handle(self, *args, **options):
        spec = read_spec(options['spec'])
        self.stdout.write(summarize(spec))


def summarize(spec):
    return ('ok p=%d vars=%s ideals=%d modules=%d jobs=%d sha256=%s' % (
        spec.p, ','.join(spec.variables), len(spec.ideals),
        len(spec.modules), len(spec.jobs), spec.digest()))
