# author: binopy contributors
# date: 2026-10-19
# version: 0.1.0

"""End-to-end runs through the command line and the artifact files."""

import json

import pytest

import binopy as bp
from binopy import cli, ioapi


def artifacts(tmp_path, tag):
    argvs = [
        ['triangle', '--n', '5', '--out', str(tmp_path / f'{tag}.pbm')],
        ['stars', '--max-len', '5', '--out', str(tmp_path / f'{tag}.json')],
        ['fractal', '--max-len', '4', '--n', '2', '--out', str(tmp_path / f'{tag}.svg'), '--json', str(tmp_path / f'{tag}-a2.json')],
        ['counts', '--n-max', '5', '--out', str(tmp_path / f'{tag}.csv')],
    ]
    for argv in argvs:
        assert cli.main(argv) == 0
    return {p.name.replace(tag, ''): p.read_bytes() for p in sorted(tmp_path.glob(f'{tag}*'))}


class TestPipeline:

    def test_byte_identical_reruns(self, tmp_path, capsys):
        first = artifacts(tmp_path, 'first')
        second = artifacts(tmp_path, 'second')
        assert first == second
        assert len(first) == 5

    def test_fractal_artifacts_agree(self, tmp_path, capsys):
        svg, js = tmp_path / 'a2.svg', tmp_path / 'a2.json'
        cli.main(['fractal', '--max-len', '4', '--n', '2', '--out', str(svg), '--json', str(js)])
        segs = bp.SegmentSet.fromDict(ioapi.fromJSON(js))
        assert list(segs) == list(bp.build_An(bp.build_A0(4), 2))
        _, lines = ioapi.fromSVG(svg)
        assert len(lines) == len(segs)

    def test_pairs_artifact_matches_segments(self, tmp_path, capsys):
        path = tmp_path / 'pairs.json'
        cli.main(['stars', '--max-len', '6', '--out', str(path)])
        data = json.loads(path.read_text())
        a0 = bp.build_A0(6)
        assert data['count'] == len(a0)
        for entry, seg in zip(data['pairs'], a0):
            assert bp.segment_for(entry['u'], entry['v']) == seg

    def test_raster_matches_squares(self, tmp_path, capsys):
        path = tmp_path / 'u5.pbm'
        cli.main(['triangle', '--n', '5', '--out', str(path)])
        image = ioapi.fromPBM(path)
        t = bp.squares(bp.build_grid(5), 1)
        assert {(int(x), int(y)) for y, x in zip(*image.bits.nonzero())} == t.anchorSet()


class TestLimitSet:

    def test_star_families_lie_in_triangle(self, stars8, grid8):
        for pair in stars8[:200]:
            extra = 8 - len(pair.u)
            for x, y in bp.star_square_family(pair, min(extra, 2)):
                assert grid8.cell(y, x) == 1

    @pytest.mark.slow
    def test_U9_closer_than_U3(self):
        approx = bp.PieceSet.fromSegments(bp.build_An(bp.build_A0(8), 4))
        far = bp.hausdorff(bp.build_Un_pieces(3), approx, grid_exp=10)
        near = bp.hausdorff(bp.build_Un_pieces(9), approx, grid_exp=10)
        assert near.estimate < far.estimate
