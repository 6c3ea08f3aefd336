# author: binopy contributors
# date: 2026-10-19
# version: 0.1.0

"""Exact clipping of pieces to axis-parallel windows, and collinear normal forms."""

from fractions import Fraction

from binopy.dyadic import ONE, ZERO, asDyadic
from binopy.errors import GeometryError
from binopy.segment import Segment

__all__ = ['Window', 'UNIT_WINDOW', 'clip_segment', 'clip_square', 'clip_pieces', 'segment_normal_form']


class Window:
    """Closed rectangle [x0, x1] × [y0, y1] with dyadic bounds and positive width and height."""

    __slots__ = ('_x0', '_y0', '_x1', '_y1')

    def __init__(self, x0, y0, x1, y1) -> None:
        x0, y0, x1, y1 = (asDyadic(c) for c in (x0, y0, x1, y1))
        if not (x0 < x1 and y0 < y1):
            raise GeometryError(f'empty window [{x0}, {x1}] x [{y0}, {y1}]')
        self._x0, self._y0, self._x1, self._y1 = x0, y0, x1, y1

    @property
    def bounds(self):
        return (self._x0, self._y0, self._x1, self._y1)

    @property
    def width(self):
        return self._x1 - self._x0

    @property
    def height(self):
        return self._y1 - self._y0

    def containsPoint(self, point):
        x, y = point
        return self._x0 <= x <= self._x1 and self._y0 <= y <= self._y1

    def __eq__(self, other):
        if not isinstance(other, Window):
            return NotImplemented
        return self.bounds == other.bounds

    def __hash__(self):
        return hash(self.bounds)

    def __repr__(self):
        return f'< Window [{self._x0}, {self._x1}] x [{self._y0}, {self._y1}] >'


UNIT_WINDOW = Window(ZERO, ZERO, ONE, ONE)


def _dyadic(f):
    try:
        return asDyadic(f)
    except ValueError:
        raise GeometryError(f'clipping point {f} is not a dyadic rational') from None


def _axisRange(start, delta, lo, hi):
    """Parameters t in [0, 1] with lo <= start + t·delta <= hi, as a (t0, t1) pair or None."""
    if not delta:
        return (Fraction(0), Fraction(1)) if lo <= start <= hi else None
    d = delta.toFraction()
    return ((lo - start).toFraction() / d, (hi - start).toFraction() / d)


def clip_segment(seg, window):
    """The part of ``seg`` inside ``window`` as a Segment (possibly a single point), or None."""
    x0, y0, x1, y1 = window.bounds
    t0, t1 = Fraction(0), Fraction(1)
    for start, delta, lo, hi in ((seg.a[0], seg.dx, x0, x1), (seg.a[1], seg.dy, y0, y1)):
        span = _axisRange(start, delta, lo, hi)
        if span is None:
            return None
        t0, t1 = max(t0, span[0]), min(t1, span[1])
    if t0 > t1:
        return None
    ax, ay = seg.a[0].toFraction(), seg.a[1].toFraction()
    dx, dy = seg.dx.toFraction(), seg.dy.toFraction()
    return Segment(
        (_dyadic(ax + t0 * dx), _dyadic(ay + t0 * dy)),
        (_dyadic(ax + t1 * dx), _dyadic(ay + t1 * dy)),
    )


def clip_square(square, window):
    """Intersection of a square with the window as (x0, y0, x1, y1), or None when it has no area."""
    x0, y0, x1, y1 = window.bounds
    sx, sy, side = square.x, square.y, square.side
    box = (max(sx, x0), max(sy, y0), min(sx + side, x1), min(sy + side, y1))
    if box[0] >= box[2] or box[1] >= box[3]:
        return None
    return box


def clip_pieces(pieces, window):
    """Clip every piece of a PieceSet, keeping their order.

    Returns:
        (boxes, segments): dyadic rectangles from the squares and segments with
        positive length; clips reduced to a single point are dropped
    """
    boxes = [b for b in (clip_square(sq, window) for sq in pieces.squares) if b is not None]
    segments = []
    for seg in pieces.segments:
        clipped = clip_segment(seg, window)
        if clipped is not None and not clipped.isDegenerate:
            segments.append(clipped)
    return boxes, segments


def line_key(seg):
    if not seg.dx:
        return ('x', seg.a[0].toFraction())
    slope = seg.slope
    return ('s', slope, seg.a[1].toFraction() - slope * seg.a[0].toFraction())


def segment_normal_form(segments):
    """Merge segments lying on a common line into maximal runs.

    Two collections describe the same point set (up to isolated points)
    exactly when their normal forms are equal.
    """
    lines = {}
    for seg in segments:
        if seg.isDegenerate:
            continue
        lines.setdefault(line_key(seg), []).append(seg)
    merged = []
    for key in sorted(lines, key=lambda k: (k[0], k[1:])):
        run = None
        for seg in sorted(lines[key]):
            if run is not None and seg.a <= run.b:
                if run.b < seg.b:
                    run = Segment(run.a, seg.b)
            else:
                if run is not None:
                    merged.append(run)
                run = seg
        merged.append(run)
    return merged
