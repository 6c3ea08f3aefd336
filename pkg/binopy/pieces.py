# author: binopy contributors
# date: 2026-10-19
# version: 0.1.0

"""Finite unions of squares and segments, and the two maps generating the approximants.

c is the homothety of center (0, 0) and ratio 1/2; h is (x, y) -> (x, 2y).
"""

import numpy as np

from binopy.base import Item
from binopy.dyadic import ONE
from binopy.errors import GeometryError
from binopy.segment import SegmentSet
from binopy.square import SquareSet
from binopy.word import _requireNatural

__all__ = ['PieceSet', 'apply_c', 'apply_h']


class PieceSet(Item):
    """Squares and segments drawn or measured together.

    Either part may be empty. The Hausdorff estimator and the vector
    renderer refuse an empty union.
    """

    def __init__(self, name='pieces', squares=None, segments=None, **attr) -> None:
        super().__init__(name, **attr)
        self._squares = squares if squares is not None else SquareSet(f'{name} squares')
        self._segments = segments if segments is not None else SegmentSet(f'{name} segments')

    @classmethod
    def fromSquares(cls, squares, name=None):
        return cls(name or squares.name, squares=squares)

    @classmethod
    def fromSegments(cls, segments, name=None):
        if not isinstance(segments, SegmentSet):
            segments = SegmentSet('segments', segments)
        return cls(name or segments.name, segments=segments)

    @property
    def squares(self):
        return self._squares

    @property
    def segments(self):
        return self._segments

    @property
    def npieces(self):
        return len(self._squares) + len(self._segments)

    @property
    def isEmpty(self):
        return self.npieces == 0

    def floatBoxes(self):
        """(N, 4) float array, squares first: (x0, y0, x1, y1) for squares, (ax, ay, bx, by) for segments,
        and the matching boolean ``isSquare`` flags."""
        anchors = self._squares.floatAnchors()
        side = self._squares.floatSide()
        squareBoxes = np.hstack([anchors, anchors + side]) if len(anchors) else np.zeros((0, 4))
        boxes = np.vstack([squareBoxes, self._segments.floatArray()])
        isSquare = np.zeros(len(boxes), dtype=bool)
        isSquare[:len(squareBoxes)] = True
        return boxes, isSquare


def apply_c(s, times=1):
    """Halve every coordinate ``times`` times."""
    _requireNatural(times, 'times')
    if times == 0:
        return s
    return PieceSet(
        s.name,
        squares=s.squares.scaled(times),
        segments=s.segments.halved(times),
        **s.properties,
    )


def apply_h(s, times=1):
    """Double every y-coordinate ``times`` times.

    Raises GeometryError when the image leaves [0, 1]² or when the set holds
    squares (their images are not squares).
    """
    _requireNatural(times, 'times')
    if times == 0:
        return s
    if s.squares:
        raise GeometryError('h maps squares to rectangles; apply it to segments only')
    image = s.segments.stretched(times)
    for seg in image:
        if seg.b[1] > ONE:
            raise GeometryError(f'h^{times} sends {seg!r} outside the unit square')
    return PieceSet(s.name, segments=image, **s.properties)
