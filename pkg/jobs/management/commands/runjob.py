from jobs.management.base import SpecCommand
from jobs.management.base import add_run_options
from jobs.management.base import read_spec


class Command(SpecCommand):
    help = 'Run the named jobs of a spec file, or all of them.'

    def add_arguments(self, parser):
        parser.add_argument('spec', help='Path of the spec file')
        parser.add_argument('names', nargs='*', help='Job names')
        add_run_options(parser)

    def handle(self, *args, **options):
        spec = read_spec(options['spec'])
        for name in options['names'] or list(spec.jobs):
            self.write_result(spec, None, name, options)
