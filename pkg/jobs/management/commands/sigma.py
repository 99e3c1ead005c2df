from jobs.management.base import SpecCommand


class Command(SpecCommand):
    help = 'Run a sigma job given on the command line against a spec file.'
    op = 'sigma'
