# author: binopy contributors
# date: 2026-10-19
# version: 0.1.0

import numpy as np

from binopy.base import Item
from binopy.dyadic import Dyadic, asDyadic
from binopy.errors import GeometryError

__all__ = ['Segment', 'SegmentSet', 'orientation']


def _point(p):
    x, y = p
    return (asDyadic(x), asDyadic(y))


def orientation(p, q, s):
    """Sign of the cross product (q - p) × (s - p): 1 left turn, -1 right turn, 0 collinear."""
    cross = (q[0] - p[0]) * (s[1] - p[1]) - (q[1] - p[1]) * (s[0] - p[0])
    return (cross.numerator > 0) - (cross.numerator < 0)


class Segment:
    """Closed segment [a, b] with exact dyadic endpoints and a <= b componentwise."""

    __slots__ = ('_a', '_b')

    def __init__(self, a, b) -> None:
        a, b = _point(a), _point(b)
        if a[0] > b[0] or a[1] > b[1]:
            raise GeometryError(f'segment endpoints must satisfy a <= b componentwise, got {a} and {b}')
        self._a = a
        self._b = b

    @property
    def a(self):
        return self._a

    @property
    def b(self):
        return self._b

    @property
    def dx(self):
        return self._b[0] - self._a[0]

    @property
    def dy(self):
        return self._b[1] - self._a[1]

    @property
    def isDegenerate(self):
        return self._a == self._b

    @property
    def slope(self):
        """dy / dx as a Fraction; None for vertical segments."""
        if not self.dx:
            return None
        return self.dy.toFraction() / self.dx.toFraction()

    @property
    def lengthSquared(self):
        return self.dx * self.dx + self.dy * self.dy

    @property
    def length(self):
        return float(self.lengthSquared) ** 0.5

    @property
    def key(self):
        return (self._a, self._b)

    def halved(self, times=1):
        """Image under the homothety c applied ``times`` times."""
        return Segment(
            (self._a[0].shift(-times), self._a[1].shift(-times)),
            (self._b[0].shift(-times), self._b[1].shift(-times)),
        )

    def stretched(self, times=1):
        """Image under the vertical doubling h applied ``times`` times."""
        return Segment((self._a[0], self._a[1].shift(times)), (self._b[0], self._b[1].shift(times)))

    def containsPoint(self, point):
        point = _point(point)
        if orientation(self._a, self._b, point):
            return False
        return self._a[0] <= point[0] <= self._b[0] and self._a[1] <= point[1] <= self._b[1]

    def containsSegment(self, other):
        return self.containsPoint(other.a) and self.containsPoint(other.b)

    def floatCoords(self):
        return (float(self._a[0]), float(self._a[1]), float(self._b[0]), float(self._b[1]))

    def toDict(self):
        return {'a': [c.toDict() for c in self._a], 'b': [c.toDict() for c in self._b]}

    @classmethod
    def fromDict(cls, d):
        return cls(tuple(Dyadic.fromDict(c) for c in d['a']), tuple(Dyadic.fromDict(c) for c in d['b']))

    def __eq__(self, other):
        if not isinstance(other, Segment):
            return NotImplemented
        return self._a == other._a and self._b == other._b

    def __hash__(self):
        return hash(tuple((c.numerator, c.exponent) for c in self._a + self._b))

    def __lt__(self, other):
        return self.key < other.key

    def __repr__(self):
        return f'< Segment ({self._a[0]}, {self._a[1]})-({self._b[0]}, {self._b[1]}) >'


class SegmentSet(Item):
    """An ordered finite set of segments, e.g. a truncation of A_0 or an approximant A_n.

    Provenance travels as keyword attributes (``maxLen``, ``p``, ``r``, ``n``).
    The order is the order of construction and is kept by every operation.
    """

    def __init__(self, name, segments=(), pairs=None, **attr) -> None:
        super().__init__(name, **attr)
        self._segments = list(segments)
        self._pairs = list(pairs) if pairs is not None else None
        if self._pairs is not None and len(self._pairs) != len(self._segments):
            raise GeometryError(f'{name}: {len(self._pairs)} pairs for {len(self._segments)} segments')

    @property
    def segments(self):
        return self._segments

    @property
    def pairs(self):
        """The (⋆) pairs the segments come from, when they are base segments S_{u,v}."""
        return self._pairs

    @property
    def nsegments(self):
        return len(self._segments)

    def __len__(self):
        return len(self._segments)

    def __iter__(self):
        return iter(self._segments)

    def __getitem__(self, k):
        return self._segments[k]

    def __bool__(self):
        return bool(self._segments)

    def __contains__(self, seg):
        return seg in set(self._segments)

    def halved(self, times=1, name=None):
        return SegmentSet(name or self.name, [s.halved(times) for s in self._segments], **self.properties)

    def stretched(self, times=1, name=None):
        return SegmentSet(name or self.name, [s.stretched(times) for s in self._segments], **self.properties)

    def floatArray(self):
        """(N, 4) array of (ax, ay, bx, by)."""
        return np.array([s.floatCoords() for s in self._segments], dtype=float).reshape(-1, 4)

    def toDict(self):
        d = {k: v for k, v in self.properties.items() if k in ('maxLen', 'p', 'r', 'n', 'maximal')}
        d['segments'] = [s.toDict() for s in self._segments]
        return d

    @classmethod
    def fromDict(cls, d, name='segments'):
        attr = {k: d[k] for k in ('maxLen', 'p', 'r', 'n', 'maximal') if k in d}
        return cls(name, [Segment.fromDict(s) for s in d['segments']], **attr)
