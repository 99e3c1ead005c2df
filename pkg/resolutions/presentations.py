import threading

from base.exceptions import InfiniteLength
from groebner.basis import BuchbergerRun
from groebner.basis import GroebnerBasis
from groebner.hilbert import hilbert_function
from groebner.hilbert import krull_dimension
from groebner.hilbert import length_of_quotient
from groebner.ideals import HomogeneousIdeal
from groebner.syzygies import ideal_module_generators
from groebner.syzygies import syzygy_vectors
from groebner.vectors import as_vector
from groebner.vectors import vector_degree
from resolutions.modules import GradedFreeModule
from resolutions.modules import GradedMatrix


def submodule_basis(ring, twists, vectors):
    """Groebner basis in S^r of span(vectors) + I S^r."""
    run = BuchbergerRun(ring.ambient, twists)
    generators = [v for v in vectors if v]
    generators.extend(ideal_module_generators(ring.ideal.generators,
                                              len(twists)))
    generators.sort(key=lambda v: vector_degree(v, twists))
    for vector in generators:
        run.add(vector)
    return GroebnerBasis(ring.ambient, twists, run.reduced_basis())


class ModulePresentation(object):
    """The cokernel of a GradedMatrix F_1 -> F_0 over a QuotientRing."""

    def __init__(self, ring, matrix):
        self.ring = ring
        self.matrix = matrix
        self._gb = None
        self._lock = threading.Lock()

    # Constructors -----------------------------------------------------------
    @classmethod
    def from_matrix(cls, ring, target_twists, source_twists, entries):
        target = GradedFreeModule(ring, target_twists)
        source = GradedFreeModule(ring, source_twists)
        return cls(ring, GradedMatrix(source, target, entries))

    @classmethod
    def free(cls, ring, twists):
        target = GradedFreeModule(ring, twists)
        return cls(ring, GradedMatrix.zero(GradedFreeModule(ring, []), target))

    @classmethod
    def zero(cls, ring):
        return cls.free(ring, [])

    @classmethod
    def from_ideal(cls, ring, ideal):
        """The cyclic module R/J."""
        if isinstance(ideal, HomogeneousIdeal):
            gens = ideal.generators
        else:
            gens = [g for g in ideal if g]
        gens = [g for g in gens if not ring.is_zero(g)]
        target = GradedFreeModule(ring, [0])
        source = GradedFreeModule(ring, [g.homogeneous_degree for g in gens])
        return cls(ring, GradedMatrix(source, target, [list(gens)]))

    @classmethod
    def ideal_module(cls, ring, ideal):
        """The ideal (J + I)/I of R as an R-module."""
        if isinstance(ideal, HomogeneousIdeal):
            gens = ideal.minimal_generators()
        else:
            gens = list(ideal)
        gens = [ring.reduce(g) for g in gens]
        gens = [g for g in gens if g]
        if not gens:
            return cls.zero(ring)
        free = GradedFreeModule(ring, [g.homogeneous_degree for g in gens])
        row = GradedMatrix(free, GradedFreeModule(ring, [0]), [gens])
        vectors = syzygy_vectors(ring.ambient, row.column_vectors(), [0],
                                 free.twists, ring.gb)
        source = GradedFreeModule(ring, [vector_degree(v, free.twists)
                                         for v in vectors])
        return cls(ring, GradedMatrix.from_columns(source, free, vectors))

    # Structure --------------------------------------------------------------
    @property
    def cover(self):
        return self.matrix.target

    @property
    def generator_twists(self):
        return self.matrix.target.twists

    def submodule_basis(self):
        """Groebner basis of the relations plus I F_0 inside S^r."""
        if self._gb is None:
            with self._lock:
                if self._gb is None:
                    self._gb = submodule_basis(self.ring,
                                               list(self.generator_twists),
                                               self.matrix.column_vectors())
        return self._gb

    def contains(self, vector):
        """Whether an element of F_0 maps to zero in the module."""
        return self.submodule_basis().contains(as_vector(vector))

    def hilbert_function(self, degree):
        if not self.generator_twists:
            return 0
        return hilbert_function(self.submodule_basis(), degree)

    @property
    def dimension(self):
        if not self.generator_twists:
            return -1
        return krull_dimension(self.submodule_basis())

    def has_finite_length(self):
        return self.dimension <= 0

    def length(self):
        """Exact length; raises InfiniteLength in positive dimension."""
        if not self.generator_twists:
            return 0
        return length_of_quotient(self.submodule_basis())

    def length_if_finite(self):
        try:
            return self.length()
        except InfiniteLength:
            return None

    def is_zero(self):
        return self.dimension < 0

    def annihilated_by(self, ideal):
        """Whether every generator of ``ideal`` kills the module."""
        for g in ideal.generators:
            for position in range(len(self.generator_twists)):
                vector = dict(((position, m), c) for m, c in g.terms.items())
                if not self.contains(vector):
                    return False
        return True

    def same_submodule(self, other):
        """Equality of the relation submodules of one free cover, checked by
        mutual normal-form membership."""
        if self.generator_twists != other.generator_twists:
            return False
        mine = self.submodule_basis()
        theirs = other.submodule_basis()
        return (all(theirs.contains(v) for v in mine.generators) and
                all(mine.contains(v) for v in theirs.generators))

    def summary(self):
        dimension = self.dimension
        return {
            'generators': len(self.generator_twists),
            'dimension': dimension,
            'length': str(self.length()) if dimension <= 0 else None,
        }

    # Operations -------------------------------------------------------------
    def direct_sum(self, other):
        m, n = self.matrix, other.matrix
        zero_top = GradedMatrix.zero(n.source, m.target)
        zero_bottom = GradedMatrix.zero(m.source, n.target)
        entries = [a + b for a, b in zip(m.entries, zero_top.entries)]
        entries.extend(a + b for a, b in zip(zero_bottom.entries, n.entries))
        return ModulePresentation(self.ring, GradedMatrix(
            m.source.direct_sum(n.source), m.target.direct_sum(n.target),
            entries))

    def tensor_presentation(self, other):
        """M (x) N as the cokernel of [phi_M (x) 1 | 1 (x) phi_N]."""
        left = self.matrix.kronecker(GradedMatrix.identity(other.cover))
        right = GradedMatrix.identity(self.cover).kronecker(other.matrix)
        return ModulePresentation(self.ring, left.hstack(right))

    def modulo_ideal(self, generators):
        """M / JM for J generated by ``generators``."""
        if isinstance(generators, HomogeneousIdeal):
            generators = generators.generators
        generators = [g for g in generators if not self.ring.is_zero(g)]
        cover = self.cover
        if not generators or cover.is_zero():
            return self
        ambient = self.ring.ambient
        twists = []
        entries = [[] for _ in range(cover.rank)]
        for k, twist in enumerate(cover.twists):
            for g in generators:
                twists.append(twist + g.homogeneous_degree)
                for row in range(cover.rank):
                    entries[row].append(g if row == k else ambient.zero())
        extra = GradedMatrix(GradedFreeModule(self.ring, twists), cover,
                             entries)
        return ModulePresentation(self.ring, self.matrix.hstack(extra))

    def to_data(self):
        return self.matrix.to_data()

    def __repr__(self):
        return '<ModulePresentation coker %r over %r>' % (self.matrix,
                                                         self.ring)
