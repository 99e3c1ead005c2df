from base.exceptions import ComposesNonzero
from resolutions.modules import GradedFreeModule
from resolutions.modules import GradedMatrix
from resolutions.presentations import ModulePresentation


class FreeComplex(object):
    """A left complex G_0 <- G_1 <- ... <- G_n of graded free modules.

    ``maps[j - 1]`` is phi_j : G_j -> G_(j-1). Consecutive maps are checked
    to compose to zero unless ``error`` is None.
    """

    def __init__(self, modules, maps, error=ComposesNonzero):
        if len(maps) != max(len(modules) - 1, 0):
            raise ValueError('%d modules need %d maps' %
                             (len(modules), len(modules) - 1))
        for j, phi in enumerate(maps, 1):
            if phi.source != modules[j] or phi.target != modules[j - 1]:
                raise ValueError('map %d does not connect G_%d to G_%d' %
                                 (j, j, j - 1))
        self.modules = list(modules)
        self.maps = list(maps)
        if error is not None:
            for j in range(1, len(self.maps)):
                if not self.maps[j - 1].compose(self.maps[j]).is_zero():
                    raise error('phi_%d o phi_%d is not zero' % (j, j + 1),
                                index=j)

    @property
    def ring(self):
        return self.modules[0].ring

    @property
    def length(self):
        return len(self.modules) - 1

    def phi(self, j):
        """phi_j, or a zero map when j is outside 1..length."""
        if 1 <= j <= self.length:
            return self.maps[j - 1]
        source = self.module(j)
        target = self.module(j - 1)
        return GradedMatrix.zero(source, target)

    def module(self, j):
        if 0 <= j <= self.length:
            return self.modules[j]
        return GradedFreeModule(self.ring, [])

    def betti_numbers(self):
        return [module.rank for module in self.modules]

    def projective_dimension(self):
        """The top nonzero index when a zero term shows the complex has
        stopped, else None."""
        ranks = self.betti_numbers()
        if 0 not in ranks[1:]:
            return None
        top = ranks.index(0, 1) - 1 if ranks[0] else -1
        return top

    def is_minimal(self):
        return all(phi.is_minimal() for phi in self.maps)

    def tensor(self, presentation):
        """G (x) N as a complex of presented modules."""
        cover = presentation.cover
        identity = GradedMatrix.identity(cover)
        modules = []
        for module in self.modules:
            relations = GradedMatrix.identity(module).kronecker(
                presentation.matrix)
            modules.append(ModulePresentation(self.ring, relations))
        maps = [phi.kronecker(identity) for phi in self.maps]
        return PresentedComplex(modules, maps)

    def to_data(self):
        return {'maps': [phi.to_data() for phi in self.maps],
                'modules': [list(m.twists) for m in self.modules]}

    @classmethod
    def from_data(cls, ring, data):
        maps = [GradedMatrix.from_data(ring, entry) for entry in data['maps']]
        modules = [GradedFreeModule(ring, twists)
                   for twists in data['modules']]
        return cls(modules, maps)

    def __eq__(self, other):
        return (isinstance(other, FreeComplex) and
                self.modules == other.modules and self.maps == other.maps)

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return '<FreeComplex betti=%s>' % self.betti_numbers()


class PresentedComplex(object):
    """A complex of presented modules M_j = coker(psi_j : P_j -> Q_j) with
    maps given on the free covers, Phi_j : Q_j -> Q_(j-1)."""

    def __init__(self, modules, maps, check=True):
        if len(maps) != max(len(modules) - 1, 0):
            raise ValueError('%d modules need %d maps' %
                             (len(modules), len(modules) - 1))
        self.modules = list(modules)
        self.maps = list(maps)
        if check:
            self._check()

    def _check(self):
        for j, phi in enumerate(self.maps, 1):
            target = self.modules[j - 1]
            if phi.target != target.cover or \
                    phi.source != self.modules[j].cover:
                raise ValueError('map %d does not connect the covers' % j)
            image = phi.compose(self.modules[j].matrix)
            if not all(target.contains(v) for v in image.column_vectors()):
                raise ValueError('map %d does not respect the relations' % j)
        for j in range(1, len(self.maps)):
            composite = self.maps[j - 1].compose(self.maps[j])
            target = self.modules[j - 1]
            if not all(target.contains(v)
                       for v in composite.column_vectors()):
                raise ComposesNonzero('Phi_%d o Phi_%d is not zero' %
                                      (j, j + 1), index=j)

    @property
    def ring(self):
        return self.modules[0].ring

    @property
    def length(self):
        return len(self.modules) - 1

    def module(self, j):
        if 0 <= j <= self.length:
            return self.modules[j]
        return ModulePresentation.zero(self.ring)

    def phi(self, j):
        if 1 <= j <= self.length:
            return self.maps[j - 1]
        return GradedMatrix.zero(self.module(j).cover,
                                 self.module(j - 1).cover)

    def __repr__(self):
        return '<PresentedComplex of length %d>' % self.length
