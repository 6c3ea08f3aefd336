# author: binopy contributors
# date: 2026-10-19
# version: 0.1.0

"""Pairs of words satisfying the (⋆)_r condition.

A pair (u, v) of canonical words, not both empty, satisfies (⋆)_r modulo p when

    binom(u, v) ≡ r (mod p),  binom(u, v0) = 0,  binom(u, v1) = 0.

The last two clauses are exact zeroes. They force binom(uw, vw) ≡ r for
every word w, so each such pair fixes a whole diagonal family of squares
in the triangle.
"""

import logging
import math

import numpy as np

from binopy.config import config
from binopy.errors import StarConditionError, ValidationError, VerificationError, WordError
from binopy.modulus import MOD2
from binopy.word import Word, _requireNatural, asWord, binary_words, binom_words, occurrences, rep2

__all__ = [
    'StarPair',
    'satisfies_star',
    'enumerate_star_pairs',
    'count_star_pairs',
    'extend_star',
    'zero_prolongation_check',
    'family_gap',
    'complete_to_star',
    'zero_tails',
    'completion_count',
    'family_cauchy',
    'star_square_family',
]

logger = logging.getLogger(__name__)


def _canonical(w, what):
    w = asWord(w)
    if not w.isCanonical:
        raise WordError(f'{what}={w.bits} is not a canonical word (it starts with 0)')
    return w


def satisfies_star(u, v, m=MOD2) -> bool:
    """Decide (⋆)_r for canonical ``u`` and ``v``; raises WordError on words outside L."""
    u, v = _canonical(u, 'u'), _canonical(v, 'v')
    if u.isEmpty and v.isEmpty:
        return False
    if len(v) > len(u) or not m.matches(binom_words(u, v)):
        return False
    return binom_words(u, v + '0') == 0 and binom_words(u, v + '1') == 0


class StarPair:
    """A pair (u, v) satisfying (⋆)_r for the modulus ``m``.

    Construction re-checks the condition unless ``check=False``, which the
    enumerator uses for pairs it has already tested.
    """

    __slots__ = ('_u', '_v', '_modulus')

    def __init__(self, u, v, m=MOD2, check=True) -> None:
        u, v = asWord(u), asWord(v)
        if check and not satisfies_star(u, v, m):
            raise StarConditionError(f'({u.bits or "ε"}, {v.bits or "ε"}) does not satisfy (⋆)_{m.r} mod {m.p}')
        self._u = u
        self._v = v
        self._modulus = m

    @property
    def u(self):
        return self._u

    @property
    def v(self):
        return self._v

    @property
    def modulus(self):
        return self._modulus

    @property
    def p(self):
        return self._modulus.p

    @property
    def r(self):
        return self._modulus.r

    @property
    def sortKey(self):
        return (len(self._u), self._u.bits, len(self._v), self._v.bits)

    def toDict(self):
        return {'u': self._u.bits, 'v': self._v.bits, 'p': self.p, 'r': self.r}

    def __iter__(self):
        return iter((self._u, self._v))

    def __eq__(self, other):
        if isinstance(other, StarPair):
            return (self._u, self._v, self._modulus) == (other._u, other._v, other._modulus)
        if isinstance(other, tuple) and len(other) == 2:
            return (self._u, self._v) == tuple(asWord(w) for w in other)
        return NotImplemented

    def __hash__(self):
        return hash((self._u, self._v, self._modulus))

    def __lt__(self, other):
        return self.sortKey < other.sortKey

    def __repr__(self):
        return f'< StarPair ({self._u.bits}, {self._v.bits}) p={self.p} r={self.r} >'


def _asPair(pair, m):
    if isinstance(pair, StarPair):
        if m is not None and m != pair.modulus:
            raise ValidationError(f'{pair!r} was built for another modulus than {m!r}')
        u, v, m = pair.u, pair.v, pair.modulus
    else:
        u, v = pair
        m = m or MOD2
    if not satisfies_star(u, v, m):
        raise StarConditionError(f'({asWord(u).bits or "ε"}, {asWord(v).bits or "ε"}) does not satisfy (⋆)_{m.r} mod {m.p}')
    return StarPair(u, v, m, check=False)


def _extendRow(row, a):
    """Row of binom(u·a, w_j) for j < 2·len(row) from the row of binom(u, w_j)."""
    size = 2 * len(row)
    j = np.arange(size)
    new = np.zeros(size, dtype=row.dtype)
    new[:len(row)] = row
    grow = (j >= 1) & ((j & 1) == a)
    new[grow] += row[j[grow] >> 1]
    return new


def _starColumns(row, length, m):
    # columns v with 1 <= val(v) < 2^length; v0 and v1 sit at 2j and 2j + 1
    j = np.arange(1, 1 << length)
    hit = (row[j] % m.p == m.r) & (row[2 * j] == 0) & (row[2 * j + 1] == 0)
    return j[hit]


def enumerate_star_pairs(max_len, m=MOD2, star_cap=None):
    """All (⋆)_r pairs with |u| <= ``max_len``, sorted by (|u|, u, |v|, v).

    Depth-first over u in L. Each node carries the exact row binom(u, w_j)
    for every j < 2^(|u|+1), extended letter by letter with the same
    recurrence as the triangle, so no coefficient is recomputed.

    Args:
        max_len (int): longest u, at most the configured ``starCap``
        m (Modulus): prime and residue class
        star_cap (int, optional): overrides ``config.starCap``

    Returns:
        List[StarPair]
    """
    _requireNatural(max_len, 'max_len')
    config.checkCap('max_len', max_len, 'starCap', star_cap)
    found = []

    def _walk(value, length, row):
        found.extend((value, int(j)) for j in _starColumns(row, length, m))
        if length < max_len:
            for a in (0, 1):
                _walk(2 * value + a, length + 1, _extendRow(row, a))

    if max_len >= 1:
        _walk(1, 1, _extendRow(np.array([1, 0], dtype=np.int64), 1))
    found.sort()
    logger.debug('%d star pairs with |u| <= %d for %r', len(found), max_len, m)
    return [StarPair(rep2(i), rep2(j), m, check=False) for i, j in found]


def count_star_pairs(max_len, m=MOD2, include_empty=False, star_cap=None) -> int:
    """Number of (⋆)_r pairs with |u| <= ``max_len``.

    ``include_empty`` also counts the pair (ε, ε), which meets every clause
    but the exclusion when r = 1.
    """
    count = len(enumerate_star_pairs(max_len, m, star_cap))
    if include_empty and m.r == 1:
        count += 1
    return count


def extend_star(pair, m=None):
    """Both one-letter extensions (u0, v0) and (u1, v1) of a (⋆)_r pair, each re-verified."""
    pair = _asPair(pair, m)
    out = []
    for a in '01':
        u, v = pair.u + a, pair.v + a
        if not satisfies_star(u, v, pair.modulus):
            raise VerificationError(f'extension ({u.bits}, {v.bits}) of {pair!r} fails (⋆)')
        out.append(StarPair(u, v, pair.modulus, check=False))
    return tuple(out)


def zero_prolongation_check(pair, max_w, m=None) -> bool:
    """True when binom(u, vw) = 0 for every non-empty w with |w| <= ``max_w``."""
    pair = _asPair(pair, m)
    for length in range(1, _requireNatural(max_w, 'max_w') + 1):
        for w in binary_words(length):
            if binom_words(pair.u, pair.v + w):
                return False
    return True


def family_gap(n, rr):
    """The pair (10^(8n+4+rr)1, 10^(8n+rr)1) and whether it satisfies (⋆) mod 2.

    The answer is True exactly for rr <= 3; these segments accumulate at (1/32, 1/2).
    """
    _requireNatural(n)
    if n > 8:
        raise ValidationError(f'n={n} is above 8')
    if isinstance(rr, bool) or not isinstance(rr, int) or not 0 <= rr <= 7:
        raise ValidationError(f'rr={rr!r} must lie in 0..7')
    u = Word('1' + '0' * (8 * n + 4 + rr) + '1')
    v = Word('1' + '0' * (8 * n + rr) + '1')
    return u, v, satisfies_star(u, v, MOD2)


def zero_tails(u, v):
    """For each occurrence of ``v`` in ``u``, the number of zeroes of ``u`` after its last letter."""
    u = asWord(u)
    bits = u.bits
    return [bits[pos[-1] + 1 if pos else 0:].count('0') for pos in occurrences(u, v)]


def completion_count(u, v, k, p=2) -> int:
    """Sum over the occurrences of v in u of C(p^k + i, p^k), i the zeroes after the occurrence.

    Equals binom(u0^(p^k)1, v0^(p^k)1).
    """
    block = p ** k
    return sum(math.comb(block + i, block) for i in zero_tails(u, v))


def complete_to_star(u, v, k, m=MOD2):
    """Complete (u, v) to the (⋆)_r pair (u0^(p^k)1, v0^(p^k)1).

    Requires binom(u, v) ≡ r (mod p) and p^k > |u|, so that every term of
    the completion count is ≡ 1 by Lucas' theorem.

    Returns:
        StarPair: the completed pair, re-verified
    """
    u, v = _canonical(u, 'u'), _canonical(v, 'v')
    _requireNatural(k, 'k')
    if u.isEmpty or v.isEmpty:
        raise ValidationError('complete_to_star needs non-empty u and v')
    if not m.matches(binom_words(u, v)):
        raise ValidationError(f'binom({u.bits}, {v.bits}) is not ≡ {m.r} mod {m.p}')
    block = m.p ** k
    if block <= len(u):
        raise ValidationError(f'{m.p}^{k} must exceed |u| = {len(u)}')
    tail = '0' * block + '1'
    uu, vv = u + tail, v + tail
    if not satisfies_star(uu, vv, m):
        raise VerificationError(f'completion of ({u.bits}, {v.bits}) with k={k} fails (⋆)')
    return StarPair(uu, vv, m, check=False)


def family_cauchy(u, m=MOD2):
    """The (⋆)_r pair (u0^|u|1^r0, u0^|u|10) attached to a canonical word ``u``."""
    u = _canonical(u, 'u')
    head = u + '0' * len(u)
    a, b = head + '1' * m.r + '0', head + '10'
    if not satisfies_star(a, b, m):
        raise VerificationError(f'({a.bits}, {b.bits}) fails (⋆)_{m.r} mod {m.p}')
    return StarPair(a, b, m, check=False)


def star_square_family(pair, extra, m=None):
    """Integer anchors (val2(vw), val2(uw)) in T_{|u|+extra} for every w with |w| <= ``extra``.

    Each of these cells carries residue r.
    """
    pair = _asPair(pair, m)
    anchors = []
    for length in range(_requireNatural(extra, 'extra') + 1):
        for w in binary_words(length):
            anchors.append(((pair.v + w).value, (pair.u + w).value))
    return sorted(anchors)
