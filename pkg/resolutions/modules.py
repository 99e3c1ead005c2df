"""Graded free modules over a QuotientRing and the matrices between them.

A basis element of twist a sits in degree a, so R(-a) is the rank-one module
with twist [a]. An entry (j, i) of a homogeneous matrix has degree
source.twists[i] - target.twists[j].
"""
from base.exceptions import NonHomogeneous
from base.exceptions import RingMismatch
from core_algebra.polynomials import Polynomial
from groebner.vectors import vector_to_polynomials


class GradedFreeModule(object):
    def __init__(self, ring, twists):
        self.ring = ring
        self.twists = tuple(int(t) for t in twists)

    @property
    def rank(self):
        return len(self.twists)

    def is_zero(self):
        return not self.twists

    def direct_sum(self, other):
        return GradedFreeModule(self.ring, self.twists + other.twists)

    def tensor(self, other):
        return GradedFreeModule(self.ring, [a + b for a in self.twists
                                            for b in other.twists])

    def shifted(self, factor):
        return GradedFreeModule(self.ring, [t * factor for t in self.twists])

    def __eq__(self, other):
        return (isinstance(other, GradedFreeModule) and
                self.ring == other.ring and self.twists == other.twists)

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        if not self.twists:
            return '0'
        return ' + '.join('R(%d)' % -t for t in self.twists)


class GradedMatrix(object):
    """A homogeneous map source -> target, entries reduced modulo I.

    ``entries`` has one row per target basis element and one column per
    source basis element.
    """

    def __init__(self, source, target, entries):
        if source.ring != target.ring:
            raise RingMismatch('source and target live over different rings')
        ring = source.ring
        if len(entries) != target.rank or any(len(row) != source.rank
                                              for row in entries):
            raise ValueError('a %d x %d matrix needs %d rows of %d entries' %
                             (target.rank, source.rank, target.rank,
                              source.rank))
        self.ring = ring
        self.source = source
        self.target = target
        self.entries = []
        for j, row in enumerate(entries):
            reduced_row = []
            for i, entry in enumerate(row):
                if not isinstance(entry, Polynomial):
                    entry = ring.ambient.constant(entry)
                entry = ring.reduce(entry)
                expected = source.twists[i] - target.twists[j]
                if entry and entry.homogeneous_degree != expected:
                    raise NonHomogeneous(
                        'entry (%d, %d) = %s should have degree %d' %
                        (j, i, entry, expected), row=j, column=i)
                reduced_row.append(entry)
            self.entries.append(reduced_row)

    @classmethod
    def from_columns(cls, source, target, vectors):
        """Build a matrix from term-dict columns."""
        ambient = source.ring.ambient
        columns = [vector_to_polynomials(ambient, v, target.rank)
                   for v in vectors]
        entries = [[columns[i][j] for i in range(source.rank)]
                   for j in range(target.rank)]
        return cls(source, target, entries)

    @classmethod
    def identity(cls, module):
        ambient = module.ring.ambient
        return cls(module, module, [
            [ambient.one() if i == j else ambient.zero()
             for i in range(module.rank)] for j in range(module.rank)])

    @classmethod
    def zero(cls, source, target):
        ambient = source.ring.ambient
        return cls(source, target, [[ambient.zero()] * source.rank
                                    for _ in range(target.rank)])

    @property
    def shape(self):
        return self.target.rank, self.source.rank

    def entry(self, row, column):
        return self.entries[row][column]

    def column(self, index):
        return [row[index] for row in self.entries]

    def column_vector(self, index):
        vector = {}
        for j, row in enumerate(self.entries):
            for monomial, coefficient in row[index].terms.items():
                vector[(j, monomial)] = coefficient
        return vector

    def column_vectors(self):
        return [self.column_vector(i) for i in range(self.source.rank)]

    def is_zero(self):
        return not any(entry for row in self.entries for entry in row)

    def unit_positions(self):
        """(row, column) pairs holding a nonzero constant."""
        return [(j, i) for j, row in enumerate(self.entries)
                for i, entry in enumerate(row)
                if entry and entry.is_constant()]

    def is_minimal(self):
        """True when every nonzero entry lies in the maximal ideal."""
        return not self.unit_positions()

    def compose(self, other):
        """Return self o other."""
        if other.target != self.source:
            raise ValueError('cannot compose %r after %r' % (self, other))
        ambient = self.ring.ambient
        entries = []
        for j in range(self.target.rank):
            row = []
            for i in range(other.source.rank):
                total = ambient.zero()
                for k in range(self.source.rank):
                    left = self.entries[j][k]
                    right = other.entries[k][i]
                    if left and right:
                        total = total + left * right
                row.append(total)
            entries.append(row)
        return GradedMatrix(other.source, self.target, entries)

    def hstack(self, other):
        """The map [self | other] from the direct sum of the sources."""
        if other.target != self.target:
            raise ValueError('matrices must share a target to be stacked')
        return GradedMatrix(self.source.direct_sum(other.source), self.target,
                            [a + b for a, b in zip(self.entries,
                                                   other.entries)])

    def kronecker(self, other):
        """The tensor product map, basis (a, b) indexed as a * rank + b."""
        source = self.source.tensor(other.source)
        target = self.target.tensor(other.target)
        entries = []
        for j1 in range(self.target.rank):
            for j2 in range(other.target.rank):
                row = []
                for i1 in range(self.source.rank):
                    left = self.entries[j1][i1]
                    for i2 in range(other.source.rank):
                        right = other.entries[j2][i2]
                        row.append(left * right if left and right
                                   else self.ring.ambient.zero())
                entries.append(row)
        return GradedMatrix(source, target, entries)

    def map_entries(self, function, source, target):
        return GradedMatrix(source, target, [
            [function(entry) for entry in row] for row in self.entries])

    def to_data(self):
        return {
            'source': list(self.source.twists),
            'target': list(self.target.twists),
            'entries': [[sorted([list(m), c] for m, c in entry.terms.items())
                         for entry in row] for row in self.entries],
        }

    @classmethod
    def from_data(cls, ring, data):
        ambient = ring.ambient
        entries = [[Polynomial(ambient, dict((tuple(m), c) for m, c in entry))
                    for entry in row] for row in data['entries']]
        return cls(GradedFreeModule(ring, data['source']),
                   GradedFreeModule(ring, data['target']), entries)

    def __eq__(self, other):
        return (isinstance(other, GradedMatrix) and
                self.source == other.source and self.target == other.target and
                self.entries == other.entries)

    def __ne__(self, other):
        return not self == other

    def __str__(self):
        return '[%s]' % '; '.join(', '.join(str(e) for e in row)
                                  for row in self.entries)

    def __repr__(self):
        return '<GradedMatrix %dx%d %s>' % (self.target.rank,
                                           self.source.rank, self)
