# author: binopy contributors
# date: 2026-10-19
# version: 0.1.0

"""The generalized Pascal triangle of L modulo a prime.

Row i and column j of a grid are indexed by the canonical words w_i = rep2(i)
and w_j = rep2(j). Every row of length-k words is derived from the row of its
prefix: with w_i = u·a and w_j = v·b,

    binom(u·a, v·b) = binom(u, v·b) + [a = b] · binom(u, v)

and v·b = w_j, v = w_{j >> 1}, b = j & 1, a = i & 1. A whole word length is
one vectorized numpy step.
"""

import logging

import numpy as np

from binopy.base import Item
from binopy.config import config
from binopy.errors import ModulusError, ValidationError
from binopy.modulus import Modulus, is_prime
from binopy.square import SquareSet
from binopy.word import _requireNatural, binom_words_mod, rep2

__all__ = [
    'ResidueGrid',
    'build_grid',
    'build_support_grid',
    'squares',
    'count_unit_squares',
    'count_positive_pairs',
    'build_Vn_by_maps',
    'brute_Vn',
    'unit_square_table',
]

logger = logging.getLogger(__name__)


class ResidueGrid(Item):
    """``cells[i, j] = binom(w_i, w_j) mod p`` for 0 <= i, j < 2^n; all residues kept."""

    def __init__(self, cells, p, name=None, **attr) -> None:
        size = cells.shape[0]
        n = size.bit_length() - 1
        if cells.shape != (size, size) or size != 1 << n:
            raise ValidationError(f'grid must be 2^n x 2^n, got shape {cells.shape}')
        super().__init__(name or f'T_{n} mod {p}', **attr)
        self._cells = cells
        self._cells.setflags(write=False)
        self._n = n
        self._p = p

    @property
    def n(self):
        return self._n

    @property
    def p(self):
        return self._p

    @property
    def size(self):
        return 1 << self._n

    @property
    def cells(self):
        return self._cells

    def cell(self, i, j):
        return int(self._cells[i, j])

    def row(self, i):
        return self._cells[i]

    def __getitem__(self, key):
        return self._cells[key]

    def mask(self, r):
        """Boolean array of the cells with residue ``r``."""
        Modulus(self._p, r)
        return self._cells == r

    def subgrid(self, n):
        """The grid of depth ``n`` <= self.n; it is the top-left block."""
        if n > self._n:
            raise ValidationError(f'subgrid depth {n} exceeds grid depth {self._n}')
        size = 1 << n
        return ResidueGrid(self._cells[:size, :size], self._p)

    def __eq__(self, other):
        if not isinstance(other, ResidueGrid):
            return NotImplemented
        return self._p == other._p and np.array_equal(self._cells, other._cells)

    __hash__ = None


def _gridDtype(p):
    if p < 128:
        return np.uint8
    if p < 2 ** 31:
        return np.int64
    raise ModulusError(f'p={p} is too large for a residue grid')


def _checkDepth(n, depth_cap):
    _requireNatural(n)
    config.checkCap('n', n, 'depthCap', depth_cap)


def _levels(n):
    """Yield (rows, parents, row letters) per word length 1..n."""
    for length in range(1, n + 1):
        rows = np.arange(1 << (length - 1), 1 << length)
        yield length, rows, rows >> 1, rows & 1


def _build_incremental(n, p):
    size = 1 << n
    cells = np.zeros((size, size), dtype=_gridDtype(p))
    cells[0, 0] = 1
    cols = np.arange(size)
    prefix = cols >> 1
    letter = cols & 1
    for length, rows, parents, rowLetter in _levels(n):
        match = letter[None, :] == rowLetter[:, None]
        match[:, 0] = False
        parent = cells[parents]
        cells[rows] = (parent + np.where(match, parent[:, prefix], 0)) % p
        logger.debug('grid mod %d: word length %d done (%d rows)', p, length, len(rows))
    return cells


def _build_cellwise(n, p):
    size = 1 << n
    cells = np.zeros((size, size), dtype=_gridDtype(p))
    words = [rep2(i) for i in range(size)]
    for i, u in enumerate(words):
        for j, v in enumerate(words[:i + 1]):
            cells[i, j] = binom_words_mod(u, v, p)
    return cells


def build_grid(n, p=2, build_style='incremental', depth_cap=None) -> ResidueGrid:
    """Residue grid of the first 2^n rows and columns of the triangle mod ``p``.

    Args:
        n (int): depth, at most the configured ``depthCap``
        p (int): prime modulus
        build_style (str): ``'incremental'`` (row from prefix row) or ``'cellwise'`` (one DP per cell)
        depth_cap (int, optional): overrides ``config.depthCap``

    Returns:
        ResidueGrid
    """
    _checkDepth(n, depth_cap)
    if not is_prime(p):
        raise ModulusError(f'p={p!r} is not a prime')
    if build_style == 'incremental':
        cells = _build_incremental(n, p)
    elif build_style == 'cellwise':
        cells = _build_cellwise(n, p)
    else:
        raise NotImplementedError(f'The build style [{build_style}] is not implemented!')
    return ResidueGrid(cells, p, build_style=build_style)


def build_support_grid(n, depth_cap=None):
    """Boolean grid of binom(w_i, w_j) > 0, by the same recurrence on positivity."""
    _checkDepth(n, depth_cap)
    size = 1 << n
    support = np.zeros((size, size), dtype=bool)
    support[0, 0] = True
    cols = np.arange(size)
    prefix = cols >> 1
    letter = cols & 1
    for _, rows, parents, rowLetter in _levels(n):
        match = letter[None, :] == rowLetter[:, None]
        match[:, 0] = False
        parent = support[parents]
        support[rows] = parent | (match & parent[:, prefix])
    support.setflags(write=False)
    return support


def squares(grid, r) -> SquareSet:
    """The unit squares of T_{n,r}: anchor (val2(w_j), val2(w_i)) for every cell with residue ``r``.

    ``squares(grid, r).scaled(grid.n)`` is U_{n,r}.
    """
    ys, xs = np.nonzero(grid.mask(r))
    return SquareSet(f'T_{grid.n},{r}', np.column_stack([xs, ys]), 0, n=grid.n, p=grid.p, r=r)


def count_unit_squares(n, depth_cap=None) -> int:
    """Number of unit squares in T_n (p = 2, r = 1)."""
    return int(np.count_nonzero(build_grid(n, 2, depth_cap=depth_cap).cells == 1))


def count_positive_pairs(n, depth_cap=None) -> int:
    """Number of (u, v) in L_n × L_n with binom(u, v) > 0; equals 3^n."""
    return int(np.count_nonzero(build_support_grid(n, depth_cap)))


_MAPS = (
    lambda x, y: (2 * x, 2 * y),
    lambda x, y: (2 * x + 1, 2 * y + 1),
    lambda x, y: (x, 2 * y),
    lambda x, y: (x, 2 * y + 1),
)


def build_Vn_by_maps(n):
    """V_n, the positive cells of the rows of length-n words, grown from V_1 by f_1, ..., f_4.

    Returns:
        set of (x, y) integer pairs, x the column value and y the row value
    """
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise ValidationError(f'n must be at least 1, got {n!r}')
    vn = {(0, 1), (1, 1)}
    for _ in range(n - 1):
        vn = {f(x, y) for x, y in vn for f in _MAPS}
    return vn


def brute_Vn(n, depth_cap=None):
    """V_n read off the support grid: {(x, y) : 2^(n-1) <= y < 2^n, binom(rep2(y), rep2(x)) > 0}."""
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise ValidationError(f'n must be at least 1, got {n!r}')
    support = build_support_grid(n, depth_cap)
    lo = 1 << (n - 1)
    ys, xs = np.nonzero(support[lo:])
    return {(int(x), int(y) + lo) for x, y in zip(xs, ys)}


def unit_square_table(n_max, depth_cap=None):
    """Rows (n, squares, positive_pairs) for n = 1..n_max from a single depth-n_max build."""
    grid = build_grid(n_max, 2, depth_cap=depth_cap)
    support = build_support_grid(n_max, depth_cap)
    rows = []
    for n in range(1, n_max + 1):
        size = 1 << n
        nsq = int(np.count_nonzero(grid.cells[:size, :size] == 1))
        npos = int(np.count_nonzero(support[:size, :size]))
        rows.append((n, nsq, npos))
        logger.debug('n=%d: %d unit squares, %d positive pairs', n, nsq, npos)
    return rows
