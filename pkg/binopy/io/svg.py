# author: binopy contributors
# date: 2026-10-19
# version: 0.1.0

import xml.etree.ElementTree as et
from typing import TextIO

__all__ = ['svg_document', 'write_svg', 'read_svg']

SVG_NS = 'http://www.w3.org/2000/svg'


def svg_document(width, height, rects=(), lines=(), stroke_width='1') -> str:
    """Serialize an SVG drawing.

    Args:
        width, height (str): canvas size
        rects (Iterable[Tuple[str, str, str, str]]): filled rectangles (x, y, width, height)
        lines (Iterable[Tuple[str, str, str, str]]): line elements (x1, y1, x2, y2)
        stroke_width (str): stroke width of the lines

    Returns:
        str: the document, elements in the given order
    """
    root = et.Element('svg', {
        'xmlns': SVG_NS,
        'width': width,
        'height': height,
        'viewBox': f'0 0 {width} {height}',
    })
    squares = et.SubElement(root, 'g', {'id': 'squares', 'fill': 'black', 'stroke': 'none'})
    for x, y, w, h in rects:
        et.SubElement(squares, 'rect', {'x': x, 'y': y, 'width': w, 'height': h})
    segments = et.SubElement(root, 'g', {'id': 'segments', 'stroke': 'black',
                                        'stroke-width': stroke_width, 'stroke-linecap': 'round'})
    for x1, y1, x2, y2 in lines:
        et.SubElement(segments, 'line', {'x1': x1, 'y1': y1, 'x2': x2, 'y2': y2})
    return et.tostring(root, encoding='unicode') + '\n'


def write_svg(fileobj: TextIO, document):
    fileobj.write(document)


def read_svg(fileobj: TextIO):
    """Parse a document written by ``write_svg`` into its rect and line attribute dicts."""
    root = et.parse(fileobj).getroot()
    rects = [dict(e.attrib) for e in root.iter(f'{{{SVG_NS}}}rect')]
    lines = [dict(e.attrib) for e in root.iter(f'{{{SVG_NS}}}line')]
    return rects, lines
