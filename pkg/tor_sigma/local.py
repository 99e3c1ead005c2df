"""H^0_m(R) and the socle, computed from saturation and ideal quotients."""
from resolutions.presentations import ModulePresentation


def local_cohomology_h0(ring):
    """H^0_m(R) = (I : m^infinity) / I as a presented R-module."""
    return ModulePresentation.ideal_module(ring, ring.h0_ideal)


def socle_module(ring):
    """Soc(R) = (I : m) / I."""
    return ModulePresentation.ideal_module(ring, ring.socle_ideal)


class SocleProfile(object):
    def __init__(self, h0, soc, h0_length, soc_length, h0_is_vector_space):
        self.h0 = h0
        self.soc = soc
        self.h0_length = h0_length
        self.l = soc_length
        self.t = h0_length - soc_length
        self.h0_is_vector_space = h0_is_vector_space

    def to_data(self):
        return {'h0_length': str(self.h0_length), 'l': str(self.l),
                't': str(self.t),
                'h0_is_vector_space': self.h0_is_vector_space}

    def __repr__(self):
        return '<SocleProfile l=%d t=%d>' % (self.l, self.t)


def socle(ring):
    h0 = local_cohomology_h0(ring)
    soc = socle_module(ring)
    return SocleProfile(h0, soc, h0.length(), soc.length(),
                        h0.annihilated_by(ring.maximal_ideal))
