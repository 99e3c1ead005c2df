from jobs.management.base import SpecCommand


class Command(SpecCommand):
    help = 'Run a resolve job given on the command line against a spec file.'
    op = 'resolve'
