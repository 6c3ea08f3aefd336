import io

from binopy.io.svg import SVG_NS, read_svg, svg_document, write_svg


class TestSVG:

    def test_document(self):
        doc = svg_document('10', '20', [('0', '0', '5', '5')], [('1', '2', '3', '4')], '0.5')
        assert doc.startswith('<svg')
        assert doc.endswith('</svg>\n')
        assert f'xmlns="{SVG_NS}"' in doc
        assert 'viewBox="0 0 10 20"' in doc
        assert doc.index('id="squares"') < doc.index('id="segments"')

    def test_read_back(self):
        doc = svg_document('10', '10', [('0', '0', '5', '5')], [('1', '2', '3', '4')], '1')
        f = io.StringIO()
        write_svg(f, doc)
        f.seek(0)
        rects, lines = read_svg(f)
        assert rects == [{'x': '0', 'y': '0', 'width': '5', 'height': '5'}]
        assert lines == [{'x1': '1', 'y1': '2', 'x2': '3', 'y2': '4'}]

    def test_empty_groups(self):
        rects, lines = read_svg(io.StringIO(svg_document('1', '1')))
        assert (rects, lines) == ([], [])
