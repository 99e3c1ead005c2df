"""Graded polynomials over a prime field.

Monomials are exponent tuples, one entry per ring variable; their degree is
the entry sum (standard grading). A Polynomial stores a dict from monomial to
a nonzero coefficient in 0..p-1.
"""
from sympy.polys.monomials import monomial_deg
from sympy.polys.monomials import monomial_mul
from sympy.polys.orderings import grevlex
from sympy.polys.orderings import lex

from base.exceptions import RingMismatch
from core_algebra.field import PrimeField


TERM_ORDERS = {
    'grevlex': grevlex,
    'lex': lex,
}


def monomial_power(monomial, q):
    return tuple(exponent * q for exponent in monomial)


class PolyRing(object):
    """The ambient ring F_p[x_1..x_n] with a term order."""

    def __init__(self, field, variables, order='grevlex'):
        if not isinstance(field, PrimeField):
            field = PrimeField(field)
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise ValueError('variable names must be unique: %r' % (variables,))
        if order not in TERM_ORDERS:
            raise ValueError('unknown term order %r' % order)
        self.field = field
        self.variables = variables
        self.order = order
        self.order_key = TERM_ORDERS[order]

    @property
    def characteristic(self):
        return self.field.p

    @property
    def nvars(self):
        return len(self.variables)

    @property
    def one_monomial(self):
        return (0,) * self.nvars

    def __eq__(self, other):
        return (isinstance(other, PolyRing) and
                self.field == other.field and
                self.variables == other.variables and
                self.order == other.order)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.field, self.variables, self.order))

    def __repr__(self):
        return 'GF(%d)[%s]' % (self.field.p, ','.join(self.variables))

    def zero(self):
        return Polynomial(self, {})

    def one(self):
        return self.constant(1)

    def constant(self, value):
        return Polynomial(self, {self.one_monomial: value})

    def monomial(self, exponents, coefficient=1):
        exponents = tuple(exponents)
        if len(exponents) != self.nvars or min(exponents or (0,)) < 0:
            raise ValueError('bad exponent vector %r for %r' % (exponents, self))
        return Polynomial(self, {exponents: coefficient})

    def gen(self, name):
        index = self.variables.index(name)
        exponents = [0] * self.nvars
        exponents[index] = 1
        return self.monomial(exponents)

    def gens(self):
        return [self.gen(name) for name in self.variables]

    def format_monomial(self, monomial):
        factors = []
        for name, exponent in zip(self.variables, monomial):
            if exponent == 1:
                factors.append(name)
            elif exponent > 1:
                factors.append('%s^%d' % (name, exponent))
        return '*'.join(factors) or '1'


class Polynomial(object):
    """An element of a PolyRing.

    Instances are treated as immutable: arithmetic always builds a new
    object, and ``terms`` must not be modified after construction.
    """
    __slots__ = ('ring', 'terms', '_homogeneous_degree')

    def __init__(self, ring, terms, normalized=False):
        self.ring = ring
        if normalized:
            self.terms = terms
        else:
            p = ring.field.p
            self.terms = {}
            for monomial, coefficient in terms.items():
                coefficient %= p
                if coefficient:
                    self.terms[tuple(monomial)] = coefficient
        self._homogeneous_degree = False

    # Structure --------------------------------------------------------------
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    @property
    def homogeneous_degree(self):
        """The common degree of all terms, or None if mixed (or zero)."""
        if self._homogeneous_degree is False:
            degrees = set(monomial_deg(m) for m in self.terms)
            self._homogeneous_degree = (
                degrees.pop() if len(degrees) == 1 else None)
        return self._homogeneous_degree

    def is_homogeneous(self):
        return self.is_zero() or self.homogeneous_degree is not None

    def degree(self):
        if not self.terms:
            return -1
        return max(monomial_deg(m) for m in self.terms)

    def is_monomial(self):
        return len(self.terms) == 1

    def is_constant(self):
        return all(monomial_deg(m) == 0 for m in self.terms)

    def sorted_terms(self):
        """Terms in decreasing term order."""
        key = self.ring.order_key
        return sorted(self.terms.items(), key=lambda item: key(item[0]),
                      reverse=True)

    def leading_term(self):
        if not self.terms:
            return None
        key = self.ring.order_key
        monomial = max(self.terms, key=key)
        return monomial, self.terms[monomial]

    def support(self):
        """Indices of the variables occurring in the polynomial."""
        used = set()
        for monomial in self.terms:
            used.update(i for i, e in enumerate(monomial) if e)
        return frozenset(used)

    def homogeneous_components(self):
        components = {}
        for monomial, coefficient in self.terms.items():
            components.setdefault(monomial_deg(monomial), {})[monomial] = \
                coefficient
        return dict((degree, Polynomial(self.ring, terms, normalized=True))
                    for degree, terms in components.items())

    # Arithmetic -------------------------------------------------------------
    def _check_ring(self, other):
        if not isinstance(other, Polynomial):
            return self.ring.constant(other)
        if other.ring != self.ring:
            raise RingMismatch('cannot combine elements of %r and %r' %
                               (self.ring, other.ring))
        return other

    def __add__(self, other):
        other = self._check_ring(other)
        p = self.ring.field.p
        terms = dict(self.terms)
        for monomial, coefficient in other.terms.items():
            value = (terms.get(monomial, 0) + coefficient) % p
            if value:
                terms[monomial] = value
            else:
                terms.pop(monomial, None)
        return Polynomial(self.ring, terms, normalized=True)

    __radd__ = __add__

    def __neg__(self):
        p = self.ring.field.p
        return Polynomial(self.ring, dict(
            (m, p - c) for m, c in self.terms.items()), normalized=True)

    def __sub__(self, other):
        return self + (-self._check_ring(other))

    def __rsub__(self, other):
        return self._check_ring(other) - self

    def scale(self, scalar):
        p = self.ring.field.p
        scalar %= p
        if not scalar:
            return self.ring.zero()
        return Polynomial(self.ring, dict(
            (m, c * scalar % p) for m, c in self.terms.items()),
            normalized=True)

    def shift(self, monomial, scalar=1):
        """Return scalar * monomial * self."""
        p = self.ring.field.p
        scalar %= p
        return Polynomial(self.ring, dict(
            (monomial_mul(m, monomial), c * scalar % p)
            for m, c in self.terms.items() if scalar), normalized=True)

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(int(other))
        other = self._check_ring(other)
        p = self.ring.field.p
        terms = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                monomial = monomial_mul(m1, m2)
                terms[monomial] = (terms.get(monomial, 0) + c1 * c2) % p
        return Polynomial(self.ring, terms)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if exponent < 0:
            raise ValueError('negative powers are not polynomials')
        result = self.ring.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def frobenius(self, e):
        """Return self^(p^e) via the freshman's dream."""
        if e < 0:
            raise ValueError('Frobenius level must be non-negative')
        if e == 0:
            return self
        field = self.ring.field
        q = field.q(e)
        return Polynomial(self.ring, dict(
            (monomial_power(m, q), field.frobenius_power(c, e))
            for m, c in self.terms.items()), normalized=True)

    # Comparison and display -------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, int):
            return self == self.ring.constant(other)
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __str__(self):
        if not self.terms:
            return '0'
        pieces = []
        for monomial, coefficient in self.sorted_terms():
            text = self.ring.format_monomial(monomial)
            if coefficient != 1:
                text = str(coefficient) if text == '1' else \
                    '%d*%s' % (coefficient, text)
            pieces.append(text)
        return ' + '.join(pieces)

    def __repr__(self):
        return '<Polynomial %s over %r>' % (self, self.ring)


def poly_arith(a, b, kind):
    """Exact ring arithmetic on two polynomials of the same ring."""
    if a.ring != b.ring:
        raise RingMismatch('cannot combine elements of %r and %r' %
                           (a.ring, b.ring))
    if kind == 'add':
        return a + b
    if kind == 'mul':
        return a * b
    raise ValueError('unknown arithmetic kind %r' % kind)


def frobenius_power_poly(f, e):
    return f.frobenius(e)
