# author: binopy contributors
# date: 2026-10-19
# version: 0.1.0

import numpy as np

from binopy.base import Item
from binopy.dyadic import Dyadic
from binopy.errors import GeometryError

__all__ = ['Square', 'SquareSet']


class Square:
    """Closed axis-parallel square [x, x + side] × [y, y + side] with dyadic corner and side."""

    __slots__ = ('_x', '_y', '_side')

    def __init__(self, x, y, side) -> None:
        self._x = x
        self._y = y
        self._side = side

    @property
    def x(self):
        return self._x

    @property
    def y(self):
        return self._y

    @property
    def side(self):
        return self._side

    @property
    def anchor(self):
        return (self._x, self._y)

    def contains(self, point):
        px, py = point
        return self._x <= px <= self._x + self._side and self._y <= py <= self._y + self._side

    def __eq__(self, other):
        if not isinstance(other, Square):
            return NotImplemented
        return (self._x, self._y, self._side) == (other._x, other._y, other._side)

    def __hash__(self):
        return hash((self._x, self._y, self._side))

    def __repr__(self):
        return f'< Square ({self._x}, {self._y}) side {self._side} >'


class SquareSet(Item):
    """A set of squares of common side 2^-exponent on the lattice 2^-exponent · Z².

    Squares are stored as integer lattice anchors (the unit squares of T_n);
    the exponent records how many times the set has been halved. A set with
    ``exponent = n`` built from T_{n,r} is U_{n,r}.

    Args:
        name (str): label, e.g. ``'U_3'``
        anchors (array-like): integer (x, y) lower-left corners, pairwise distinct
        exponent (int): side exponent
        attr: provenance such as ``n``, ``p`` and ``r``
    """

    def __init__(self, name, anchors=(), exponent=0, **attr) -> None:
        super().__init__(name, **attr)
        anchors = np.asarray(anchors, dtype=np.int64).reshape(-1, 2)
        if len(anchors):
            if anchors.min() < 0:
                raise GeometryError(f'{name}: square anchors must be non-negative')
            if len(np.unique(anchors, axis=0)) != len(anchors):
                raise GeometryError(f'{name}: square anchors are not pairwise distinct')
        # row-major order: by y, then x
        order = np.lexsort((anchors[:, 0], anchors[:, 1]))
        self._anchors = anchors[order]
        self._anchors.setflags(write=False)
        self._exponent = int(exponent)

    @property
    def anchors(self):
        return self._anchors

    @property
    def exponent(self):
        return self._exponent

    @property
    def side(self):
        return Dyadic(1, self._exponent)

    @property
    def nsquares(self):
        return len(self._anchors)

    def __len__(self):
        return len(self._anchors)

    def __bool__(self):
        return len(self._anchors) > 0

    def square(self, k):
        x, y = self._anchors[k]
        return Square(Dyadic(int(x), self._exponent), Dyadic(int(y), self._exponent), self.side)

    def __iter__(self):
        for k in range(len(self._anchors)):
            yield self.square(k)

    def anchorSet(self):
        return {(int(x), int(y)) for x, y in self._anchors}

    def scaled(self, times, name=None):
        """Image under ``times`` applications of the homothety c."""
        return SquareSet(name or self.name, self._anchors, self._exponent + times, **self.properties)

    def floatAnchors(self):
        return np.ldexp(self._anchors.astype(float), -self._exponent)

    def floatSide(self):
        return float(np.ldexp(1.0, -self._exponent))

    def toDict(self):
        d = {k: self.properties.get(k) for k in ('n', 'p', 'r')}
        d['exponent'] = self._exponent
        d['anchors'] = self._anchors.tolist()
        return d

    @classmethod
    def fromDict(cls, d, name=None):
        attr = {k: d[k] for k in ('n', 'p', 'r') if d.get(k) is not None}
        return cls(name or f"T_{d.get('n')}", d['anchors'], d.get('exponent', 0), **attr)
