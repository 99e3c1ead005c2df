"""Identity chains relating Tor against R/(y), R/H^0_m(R) and H^0_m(R),
and additivity of sigma_i over short exact sequences."""
import logging

from base.exceptions import HypothesisFails
from resolutions.minimal import minimal_free_resolution
from resolutions.minimal import syzygy_module
from resolutions.presentations import ModulePresentation
from tor_sigma.local import local_cohomology_h0
from tor_sigma.tor import sigma
from tor_sigma.tor import tor_table


logger = logging.getLogger(__name__)

SATISFIED = 'satisfied'
VACUOUS = 'vacuous'


class IdentityRow(object):
    """One claimed equality, all of whose sides were computed separately."""

    def __init__(self, label, values):
        self.label = label
        self.values = list(values)

    @property
    def equal(self):
        return len(set(self.values)) == 1

    def to_data(self):
        return {'label': self.label, 'values': [str(v) for v in self.values],
                'equal': self.equal}


class IdentityReport(object):
    def __init__(self, name, hypothesis, rows=(), note=''):
        self.name = name
        self.hypothesis = hypothesis
        self.rows = list(rows)
        self.note = note

    @property
    def holds(self):
        if self.hypothesis != SATISFIED:
            return None
        return all(row.equal for row in self.rows)

    def to_data(self):
        return {'name': self.name, 'hypothesis': self.hypothesis,
                'rows': [row.to_data() for row in self.rows],
                'holds': self.holds, 'note': self.note}


def lemma_add_check(ring, module, y, j_max=4):
    """Tor of a finite-length M against R/(y), (y), R/H^0 and H^0, for an
    element y with (0 : y) = H^0_m(R)."""
    if ring.annihilator(y) != ring.h0_ideal:
        raise HypothesisFails('(0 : %s) is not H^0_m(R)' % y, element=y)
    h0_gens = ring.h0_ideal.generators
    resolution = minimal_free_resolution(module, j_max + 1)
    by_y = ModulePresentation.from_ideal(ring, [y])
    principal = ModulePresentation.ideal_module(ring, [y])
    by_h0 = ModulePresentation.from_ideal(ring, h0_gens)
    h0 = local_cohomology_h0(ring)

    tor_y = tor_table(module, by_y, j_max, resolution)
    tor_principal = tor_table(module, principal, j_max - 1, resolution)
    tor_by_h0 = tor_table(module, by_h0, j_max, resolution)
    tor_h0 = tor_table(module, h0, j_max - 1, resolution)
    length = module.length()
    torsion_free_part = module.modulo_ideal(h0_gens).length()

    rows = [
        IdentityRow('Tor_1(M, R/(y)) = M (x) (y) = M / H^0 M',
                    [tor_y[1], tor_principal[0], torsion_free_part]),
        IdentityRow('Tor_1(M, R/H^0) = M (x) H^0 - M + M / H^0 M',
                    [tor_by_h0[1],
                     tor_h0[0] - length + torsion_free_part]),
    ]
    for j in range(2, j_max + 1):
        rows.append(IdentityRow(
            'Tor_%d(M, R/(y)) = Tor_%d(M, (y)) = Tor_%d(M, R/H^0)'
            % (j, j - 1, j - 1),
            [tor_y[j], tor_principal[j - 1], tor_by_h0[j - 1]]))
        rows.append(IdentityRow(
            'Tor_%d(M, R/H^0) = Tor_%d(M, H^0)' % (j, j - 1),
            [tor_by_h0[j], tor_h0[j - 1]]))
    return IdentityReport('add', SATISFIED, rows)


def divide_check(ring, module, i):
    """lambda(Syz_(i+1) M) against sigma_(i-2)(M, H^0_m(R)) when the syzygy
    has finite length."""
    if not ring.depth_zero:
        raise HypothesisFails('the ring has positive depth')
    if ring.dimension not in (1, 2):
        raise HypothesisFails('the ring has dimension %d, not 1 or 2'
                              % ring.dimension, dimension=ring.dimension)
    if i < 2:
        return IdentityReport('divide', VACUOUS, note='index %d is below 2'
                              % i)
    syzygy = syzygy_module(module, i + 1)
    if not syzygy.has_finite_length():
        return IdentityReport(
            'divide', VACUOUS,
            note='Syz_%d has dimension %d' % (i + 1, syzygy.dimension))
    logger.warning('finite Syz_%d found in dimension %d', i + 1,
                   ring.dimension)
    h0 = local_cohomology_h0(ring)
    row = IdentityRow('Syz_%d(M) = sigma_%d(M, H^0)' % (i + 1, i - 2),
                      [syzygy.length(), sigma(module, h0, i - 2)])
    return IdentityReport('divide', SATISFIED, [row])


def sigma_additivity_check(module, first, third, i, middle=None):
    """sigma_i over 0 -> N1 -> N2 -> N3 -> 0.

    The split sequence is always checked. A supplied middle term is taken
    on trust as part of an exact sequence and checked only when
    Tor_(i+1)(M, N3) vanishes.
    """
    resolution = minimal_free_resolution(module, i + 2)
    left = sigma(module, first, i, tor_table(module, first, i, resolution))
    right = sigma(module, third, i, tor_table(module, third, i, resolution))
    split = first.direct_sum(third)
    rows = [IdentityRow('sigma_%d(M, N1 + N3) = sigma_%d(M, N1) + '
                        'sigma_%d(M, N3)' % (i, i, i),
                        [sigma(module, split, i,
                               tor_table(module, split, i, resolution)),
                         left + right])]
    note = ''
    if middle is not None:
        vanishing = tor_table(module, third, i + 1, resolution)[i + 1]
        if vanishing == 0:
            rows.append(IdentityRow(
                'sigma_%d(M, N2) = sigma_%d(M, N1) + sigma_%d(M, N3)'
                % (i, i, i),
                [sigma(module, middle, i,
                       tor_table(module, middle, i, resolution)),
                 left + right]))
        else:
            note = ('Tor_%d(M, N3) has length %d; the supplied sequence was '
                    'not checked' % (i + 1, vanishing))
    return IdentityReport('sigma additivity', SATISFIED, rows, note)
