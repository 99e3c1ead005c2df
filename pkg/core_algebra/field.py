from sympy.ntheory import isprime

from base.exceptions import NotPrime


MAX_CHARACTERISTIC = 2 ** 31 - 1


class PrimeField(object):
    """The prime field F_p.

    Elements are plain ints kept in the range 0..p-1; the field object only
    knows how to normalize and combine them.
    """
    __slots__ = ('p',)

    def __init__(self, p):
        p = int(p)
        if p < 2 or p > MAX_CHARACTERISTIC or not isprime(p):
            raise NotPrime('characteristic %d is not a supported prime' % p,
                           p=p)
        self.p = p

    def __eq__(self, other):
        return isinstance(other, PrimeField) and self.p == other.p

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(('PrimeField', self.p))

    def __repr__(self):
        return 'GF(%d)' % self.p

    def __call__(self, value):
        return int(value) % self.p

    def inverse(self, value):
        value %= self.p
        if not value:
            raise ZeroDivisionError('0 has no inverse in %r' % self)
        return pow(value, self.p - 2, self.p)

    def frobenius_power(self, value, e):
        """Return value^(p^e); the identity on F_p, computed honestly."""
        return pow(value % self.p, self.p ** e, self.p)

    def q(self, e):
        """The Frobenius level q = p^e as an exact integer."""
        if e < 0:
            raise ValueError('Frobenius level must be non-negative')
        return self.p ** e
