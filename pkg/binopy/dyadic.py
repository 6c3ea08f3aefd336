# author: binopy contributors
# date: 2026-10-19
# version: 0.1.0

"""Exact dyadic rationals k / 2^e, the coordinate type of every geometric object."""

import math
from fractions import Fraction
from functools import total_ordering

__all__ = ['Dyadic', 'ZERO', 'ONE', 'HALF', 'asDyadic']


@total_ordering
class Dyadic:
    """The number ``num / 2**exp`` kept in canonical form.

    Canonical form has an odd numerator and ``exp >= 0``, or ``num == 0`` with
    ``exp == 0``. Addition, subtraction, multiplication and scaling by powers
    of two are exact; division by anything but a power of two is not offered.
    Coordinates are non-negative; differences may be negative.
    """

    __slots__ = ('_num', '_exp')

    def __init__(self, num=0, exp=0) -> None:
        if isinstance(num, bool) or not isinstance(num, int) or not isinstance(exp, int):
            raise TypeError(f'Dyadic needs integer numerator and exponent, got ({num!r}, {exp!r})')
        if exp < 0:
            num <<= -exp
            exp = 0
        if num == 0:
            exp = 0
        elif exp:
            shift = min((num & -num).bit_length() - 1, exp)
            num >>= shift
            exp -= shift
        self._num = num
        self._exp = exp

    @classmethod
    def fromWord(cls, w):
        """The rational 0.w = sum of w_i / 2^i; leading zeroes of ``w`` count."""
        bits = str(w)
        return cls(int(bits, 2) if bits else 0, len(bits))

    @classmethod
    def fromDict(cls, d):
        return cls(int(d['num']), int(d['exp']))

    @property
    def numerator(self):
        return self._num

    @property
    def exponent(self):
        return self._exp

    def toDict(self):
        return {'num': self._num, 'exp': self._exp}

    def toFraction(self):
        return Fraction(self._num, 1 << self._exp)

    def shift(self, k):
        """Multiply by 2^k (k may be negative)."""
        return Dyadic(self._num, self._exp - k)

    def _align(self, other):
        e = max(self._exp, other._exp)
        return self._num << (e - self._exp), other._num << (e - other._exp), e

    def __add__(self, other):
        other = asDyadic(other)
        a, b, e = self._align(other)
        return Dyadic(a + b, e)

    __radd__ = __add__

    def __sub__(self, other):
        other = asDyadic(other)
        a, b, e = self._align(other)
        return Dyadic(a - b, e)

    def __rsub__(self, other):
        return asDyadic(other) - self

    def __neg__(self):
        return Dyadic(-self._num, self._exp)

    def __abs__(self):
        return Dyadic(abs(self._num), self._exp)

    def __mul__(self, other):
        other = asDyadic(other)
        return Dyadic(self._num * other._num, self._exp + other._exp)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            other = Dyadic(other)
        if not isinstance(other, Dyadic):
            return NotImplemented
        return self._num == other._num and self._exp == other._exp

    def __lt__(self, other):
        other = asDyadic(other)
        a, b, _ = self._align(other)
        return a < b

    def __hash__(self):
        return hash(Fraction(self._num, 1 << self._exp))

    def __float__(self):
        return math.ldexp(self._num, -self._exp)

    def __bool__(self):
        return self._num != 0

    def __str__(self):
        if self._exp == 0:
            return str(self._num)
        return f'{self._num}/{1 << self._exp}'

    def __repr__(self):
        return f'< Dyadic {self} >'


def asDyadic(x):
    if isinstance(x, Dyadic):
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        return Dyadic(x)
    if isinstance(x, Fraction):
        den = x.denominator
        if den & (den - 1):
            raise ValueError(f'{x} is not a dyadic rational')
        return Dyadic(x.numerator, den.bit_length() - 1)
    raise TypeError(f'cannot read {x!r} as a dyadic rational')


ZERO = Dyadic(0)
ONE = Dyadic(1)
HALF = Dyadic(1, 1)
