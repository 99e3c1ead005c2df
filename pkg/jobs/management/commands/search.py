from jobs.management.base import SpecCommand


class Command(SpecCommand):
    help = ('Sweep a family of monomial rings for finite-length syzygies, '
            'e.g. search nvars=3 degree=2..2 dimension=2 bound=3.')
    op = 'search'
    needs_spec = False
