from django.core.management.base import BaseCommand

from jobs.management.base import read_spec


class Command(BaseCommand):
    help = 'Print a spec file in canonical form.'

    def add_arguments(self, parser):
        parser.add_argument('spec', help='Path of the spec file')

    def handle(self, *args, **options):
        self.stdout.write(read_spec(options['spec']).canonical_text(),
                          ending='')
