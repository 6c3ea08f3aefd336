# author: binopy contributors
# date: 2026-10-19
# version: 0.1.0

import math

from binopy.errors import ModulusError

__all__ = ['Modulus', 'MOD2', 'is_prime', 'binom_int', 'binom_int_lucas']


def is_prime(p) -> bool:
    if isinstance(p, bool) or not isinstance(p, int) or p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class Modulus:
    """A prime ``p`` together with a residue class ``r`` in {1, ..., p-1}."""

    __slots__ = ('_p', '_r')

    def __init__(self, p=2, r=1) -> None:
        if not is_prime(p):
            raise ModulusError(f'p={p!r} is not a prime')
        if isinstance(r, bool) or not isinstance(r, int) or not 1 <= r < p:
            raise ModulusError(f'residue r={r!r} must lie in 1..{p - 1}')
        self._p = p
        self._r = r

    @property
    def p(self):
        return self._p

    @property
    def r(self):
        return self._r

    def residue(self, value):
        return value % self._p

    def matches(self, value):
        return value % self._p == self._r

    def withResidue(self, r):
        return Modulus(self._p, r)

    def __eq__(self, other):
        if not isinstance(other, Modulus):
            return NotImplemented
        return (self._p, self._r) == (other._p, other._r)

    def __hash__(self):
        return hash((self._p, self._r))

    def __repr__(self):
        return f'< Modulus p={self._p} r={self._r} >'


MOD2 = Modulus(2, 1)


def binom_int(m, n) -> int:
    """Exact integer binomial with the convention C(m, n) = 0 when n > m."""
    if n < 0 or n > m:
        return 0
    return math.comb(m, n)


def binom_int_lucas(m, n, p) -> int:
    """C(m, n) mod p as the product of digitwise binomials of the base-p expansions.

    The shorter expansion is padded with zeroes and C(m_i, n_i) = 0 when m_i < n_i.
    """
    if not is_prime(p):
        raise ModulusError(f'p={p!r} is not a prime')
    if m < 0 or n < 0:
        raise ModulusError(f'binomial arguments must be natural, got ({m}, {n})')
    result = 1
    while m or n:
        m, mi = divmod(m, p)
        n, ni = divmod(n, p)
        if mi < ni:
            return 0
        result = result * math.comb(mi, ni) % p
    return result % p
