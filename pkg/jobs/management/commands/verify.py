from jobs.management.base import SpecCommand


class Command(SpecCommand):
    help = ('Run a theorem check: verify SPEC CHECK MODULE [options], with '
            'CHECK one of big-socle, dim2, bad-to-good, even-index, syz5, '
            'dim2-sigma, depth-band.')
    op = 'verify'
