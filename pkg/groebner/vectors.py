"""Free-module elements as term dicts.

A vector of S^r is a dict mapping (position, monomial) to a nonzero
coefficient. Ideals are the rank-one case with every position equal to 0.
Position 0 is the most significant under the position-over-term order, so a
vector whose leading term sits in a late position has no terms in earlier
positions.
"""
from sympy.polys.monomials import monomial_deg

from base.exceptions import NonHomogeneous
from core_algebra.polynomials import Polynomial


def module_key(ring):
    order_key = ring.order_key

    def key(term):
        return (-term[0], order_key(term[1]))
    return key


def as_vector(element):
    """Accept a Polynomial, a sequence of Polynomials, or a term dict."""
    if isinstance(element, dict):
        return element
    if isinstance(element, Polynomial):
        return dict(((0, m), c) for m, c in element.terms.items())
    vector = {}
    for position, entry in enumerate(element):
        for monomial, coefficient in entry.terms.items():
            vector[(position, monomial)] = coefficient
    return vector


def vector_to_polynomials(ring, vector, rank):
    rows = [{} for _ in range(rank)]
    for (position, monomial), coefficient in vector.items():
        rows[position][monomial] = coefficient
    return [Polynomial(ring, row, normalized=True) for row in rows]


def vector_to_polynomial(ring, vector):
    return Polynomial(ring, dict((m, c) for (_, m), c in vector.items()),
                      normalized=True)


def term_degree(term, degrees):
    return monomial_deg(term[1]) + degrees[term[0]]


def vector_degree(vector, degrees):
    """Degree of a homogeneous vector; None for the zero vector."""
    found = None
    for term in vector:
        degree = term_degree(term, degrees)
        if found is None:
            found = degree
        elif degree != found:
            raise NonHomogeneous(
                'vector mixes degrees %d and %d' % (found, degree),
                degrees=(found, degree))
    return found


def shift_positions(vector, offset):
    return dict(((pos + offset, m), c) for (pos, m), c in vector.items())


def scale_vector(vector, scalar, p):
    scalar %= p
    if not scalar:
        return {}
    return dict((t, c * scalar % p) for t, c in vector.items())


def add_into(target, vector, p, scalar=1):
    """target += scalar * vector, in place."""
    for term, coefficient in vector.items():
        value = (target.get(term, 0) + scalar * coefficient) % p
        if value:
            target[term] = value
        else:
            target.pop(term, None)
    return target
