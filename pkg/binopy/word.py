# author: binopy contributors
# date: 2026-10-19
# version: 0.1.0

"""Finite binary words, the base-2 codec and binomial coefficients of words.

The coefficient ``binom_words(u, v)`` counts the occurrences of ``v`` as a
scattered subword of ``u``. It is defined on every binary word; only the
triangle and star enumerations restrict themselves to the canonical language
L = {ε} ∪ 1{0,1}*.
"""

from itertools import product

from binopy.errors import WordError

__all__ = [
    'Word',
    'EMPTY',
    'asWord',
    'rep2',
    'val2',
    'nth_word',
    'canonical_words',
    'binary_words',
    'binom_words',
    'binom_words_mod',
    'sum_of_digits_base2',
    'occurrences',
]

EMPTY_SYMBOL = 'ε'


class Word:
    """An immutable finite word over {0, 1}.

    Words compare in genealogical order (length first, then lexicographic
    with 0 < 1), which on canonical words is the order of their values.
    """

    __slots__ = ('_bits',)

    def __init__(self, bits='') -> None:
        if isinstance(bits, Word):
            bits = bits._bits
        elif isinstance(bits, (list, tuple)):
            bits = ''.join(str(b) for b in bits)
        if bits == EMPTY_SYMBOL:
            bits = ''
        if not isinstance(bits, str) or bits.strip('01'):
            raise WordError(f'{bits!r} is not a binary word')
        self._bits = bits

    @property
    def bits(self):
        return self._bits

    @property
    def isCanonical(self):
        return self._bits == '' or self._bits[0] == '1'

    @property
    def isEmpty(self):
        return self._bits == ''

    @property
    def value(self):
        return int(self._bits, 2) if self._bits else 0

    def count(self, letter):
        return self._bits.count(str(letter))

    def append(self, letter):
        return Word(self._bits + str(letter))

    def __len__(self):
        return len(self._bits)

    def __iter__(self):
        return (int(a) for a in self._bits)

    def __getitem__(self, key):
        if isinstance(key, slice):
            return Word(self._bits[key])
        return int(self._bits[key])

    def __add__(self, other):
        return Word(self._bits + asWord(other)._bits)

    def __radd__(self, other):
        return Word(asWord(other)._bits + self._bits)

    def __mul__(self, times):
        return Word(self._bits * times)

    def __eq__(self, other):
        if isinstance(other, Word):
            return self._bits == other._bits
        if isinstance(other, str):
            return self._bits == ('' if other == EMPTY_SYMBOL else other)
        return NotImplemented

    def __hash__(self):
        return hash(self._bits)

    def __lt__(self, other):
        other = asWord(other)
        return (len(self), self._bits) < (len(other), other._bits)

    def __str__(self):
        return self._bits

    def __repr__(self):
        return f'< Word {self._bits or EMPTY_SYMBOL} >'


EMPTY = Word('')


def asWord(w) -> Word:
    """Coerce a Word, a string of 0/1 (``''`` or ``'ε'`` for the empty word) or a letter sequence."""
    if isinstance(w, Word):
        return w
    return Word(w)


def _requireNatural(n, what='n'):
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise WordError(f'{what} must be a natural number, got {n!r}')
    return n


def rep2(n) -> Word:
    """Greedy base-2 expansion of ``n``; ``rep2(0)`` is the empty word."""
    _requireNatural(n)
    return Word(format(n, 'b')) if n else EMPTY


def val2(w) -> int:
    """Value of a binary word; leading zeroes are allowed and ignored."""
    return asWord(w).value


def nth_word(i) -> Word:
    """The i-th word of L in genealogical order."""
    return rep2(_requireNatural(i, 'i'))


def canonical_words(max_len):
    """Yield L_n, the 2^n canonical words of length at most ``max_len``, in genealogical order."""
    for i in range(1 << _requireNatural(max_len, 'max_len')):
        yield rep2(i)


def binary_words(length):
    """Yield every binary word of exactly ``length`` letters (leading zeroes included)."""
    for letters in product('01', repeat=length):
        yield Word(''.join(letters))


def binom_words(u, v) -> int:
    """Number of occurrences of ``v`` as a scattered subword of ``u``.

    Prefix dynamic program: after reading ``u[:i]``, ``counts[j]`` is the
    coefficient of ``v[:j]``, updated by
    binom(ua, vb) = binom(u, vb) + [a = b] binom(u, v).

    Args:
        u (Word | str): the word searched in
        v (Word | str): the word searched for

    Returns:
        int: exact coefficient
    """
    u, v = asWord(u).bits, asWord(v).bits
    if len(v) > len(u):
        return 0
    counts = [1] + [0] * len(v)
    for a in u:
        for j in range(len(v), 0, -1):
            if v[j - 1] == a:
                counts[j] += counts[j - 1]
    return counts[-1]


def binom_words_mod(u, v, m) -> int:
    """``binom_words(u, v) mod p`` computed on residues only.

    Args:
        m (Modulus | int): modulus, or a bare prime p
    """
    p = getattr(m, 'p', m)
    u, v = asWord(u).bits, asWord(v).bits
    if len(v) > len(u):
        return 0
    counts = [1 % p] + [0] * len(v)
    for a in u:
        for j in range(len(v), 0, -1):
            if v[j - 1] == a:
                counts[j] = (counts[j] + counts[j - 1]) % p
    return counts[-1]


def sum_of_digits_base2(n) -> int:
    return bin(_requireNatural(n)).count('1')


def occurrences(u, v):
    """Yield each embedding of ``v`` in ``u`` as a tuple of 0-based positions, lexicographically."""
    u, v = asWord(u).bits, asWord(v).bits
    picked = []

    def _walk(start, j):
        if j == len(v):
            yield tuple(picked)
            return
        for k in range(start, len(u) - (len(v) - j) + 1):
            if u[k] == v[j]:
                picked.append(k)
                yield from _walk(k + 1, j + 1)
                picked.pop()

    yield from _walk(0, 0)
