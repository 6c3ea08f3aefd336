# author: binopy contributors
# date: 2026-10-19
# version: 0.1.0

"""Raster images of residue grids and vector drawings of piece sets.

Geometry lives in mathematical axes (y upward, row u = ε at the bottom).
Both outputs put u = ε on top, as the triangle is usually printed: raster
row k is grid row i = k, and SVG y-coordinates are flipped.
"""

from fractions import Fraction

import numpy as np

from binopy.algorithms.clipping import UNIT_WINDOW, Window, clip_pieces
from binopy.config import config
from binopy.errors import GeometryError, ValidationError
from binopy.io.pbm import parse_pbm, pbm_bytes
from binopy.io.svg import svg_document

__all__ = ['RasterImage', 'render_grid_pbm', 'read_pbm', 'render_pieces_svg', 'render_zoom']


class RasterImage:
    """A 0/1 bitmap, row 0 on top."""

    def __init__(self, bits) -> None:
        bits = np.asarray(bits, dtype=np.uint8)
        if bits.ndim != 2 or (bits > 1).any():
            raise ValidationError('a raster image is a 2-d array of 0/1 bits')
        self._bits = bits
        self._bits.setflags(write=False)

    @classmethod
    def fromGrid(cls, grid, r):
        """Bit (k, j) is set when cell (i = k, j) of the grid has residue ``r``."""
        return cls(grid.mask(r).astype(np.uint8))

    @classmethod
    def fromPBM(cls, data):
        return cls(parse_pbm(data))

    @property
    def bits(self):
        return self._bits

    @property
    def width(self):
        return self._bits.shape[1]

    @property
    def height(self):
        return self._bits.shape[0]

    def count(self):
        return int(self._bits.sum())

    def flipped(self):
        """Mirror top to bottom; flipping twice gives the image back."""
        return RasterImage(self._bits[::-1])

    def toPBM(self) -> bytes:
        return pbm_bytes(self._bits)

    def __eq__(self, other):
        if not isinstance(other, RasterImage):
            return NotImplemented
        return np.array_equal(self._bits, other._bits)

    __hash__ = None

    def __repr__(self):
        return f'< RasterImage {self.width}x{self.height} >'


def render_grid_pbm(grid, r):
    """P1 raster of the cells with residue ``r``.

    Returns:
        (RasterImage, bytes): the bitmap and its P1 serialization
    """
    image = RasterImage.fromGrid(grid, r)
    return image, image.toPBM()


def read_pbm(fileobj):
    return RasterImage.fromPBM(fileobj.read())


def _decimal(value):
    """Exact decimal text of a Fraction whose denominator is 2^a·5^b, else 9 fractional digits."""
    value = Fraction(value)
    den, digits = value.denominator, 0
    for prime in (2, 5):
        count = 0
        while den % prime == 0:
            den //= prime
            count += 1
        digits = max(digits, count)
    if den != 1:
        text = f'{float(value):.9f}'.rstrip('0').rstrip('.')
        return '0' if text in ('', '-0') else text
    scaled = value.numerator * 10 ** digits // value.denominator
    sign = '-' if scaled < 0 else ''
    whole, frac = divmod(abs(scaled), 10 ** digits)
    if not frac:
        return f'{sign}{whole}'
    return f'{sign}{whole}.' + str(frac).rjust(digits, '0').rstrip('0')


def render_zoom(p, window, canvas_px=None, stroke_width=None) -> str:
    """SVG drawing of the part of ``p`` inside ``window``.

    Pieces are clipped exactly; the window is scaled so that its longer side
    spans ``canvas_px`` pixels. A window missing every piece yields a drawing
    with empty groups.
    """
    if not isinstance(window, Window):
        window = Window(*window)
    canvas_px = config.canvasPx if canvas_px is None else canvas_px
    stroke_width = config.strokeWidth if stroke_width is None else stroke_width
    boxes, segments = clip_pieces(p, window)
    x0, y0, x1, y1 = (c.toFraction() for c in window.bounds)
    scale = Fraction(canvas_px) / max(x1 - x0, y1 - y0)

    def X(x):
        return _decimal((x.toFraction() - x0) * scale)

    def Y(y):
        return _decimal((y1 - y.toFraction()) * scale)

    rects = [
        (X(bx0), Y(by1), _decimal((bx1 - bx0).toFraction() * scale), _decimal((by1 - by0).toFraction() * scale))
        for bx0, by0, bx1, by1 in boxes
    ]
    lines = [(X(seg.a[0]), Y(seg.a[1]), X(seg.b[0]), Y(seg.b[1])) for seg in segments]
    return svg_document(
        _decimal((x1 - x0) * scale),
        _decimal((y1 - y0) * scale),
        rects,
        lines,
        _decimal(Fraction(stroke_width)),
    )


def render_pieces_svg(p, stroke_width=None, canvas_px=None) -> str:
    """SVG drawing of a non-empty PieceSet in the unit square: squares as rects, then segments as lines."""
    if p.isEmpty:
        raise GeometryError(f'{p!r} has nothing to draw')
    return render_zoom(p, UNIT_WINDOW, canvas_px, stroke_width)
