# author: binopy contributors
# date: 2026-10-19
# version: 0.1.0

import itertools
import math

import pytest

import binopy as bp
from binopy.algorithms.clipping import Window
from binopy.algorithms.hausdorff import DistanceField
from binopy.dyadic import Dyadic, HALF, ONE, ZERO

# d_h(U_n, A_4) with A_0 cut at |u| <= 8, n = 3..9, to four decimals
REFERENCE_DISTANCES = {3: 0.0884, 4: 0.0625, 5: 0.0699, 6: 0.0625, 7: 0.0316, 8: 0.0315, 9: 0.0315}
ROUNDING = 1e-4


def point(x, y):
    return (Dyadic(*x) if isinstance(x, tuple) else Dyadic(x), Dyadic(*y) if isinstance(y, tuple) else Dyadic(y))


class TestSegments:

    def test_cited_coordinates(self):
        assert bp.segment_for('1', '1') == bp.Segment((HALF, HALF), (ONE, ONE))
        s = bp.segment_for('1101', '111')
        assert s.a == point((7, 4), (13, 4))
        assert s.lengthSquared == Dyadic(2, 8)
        assert bp.segment_for('101', '11').a == point((3, 3), (5, 3))

    def test_preconditions(self):
        with pytest.raises(bp.ValidationError):
            bp.segment_for('1', '11')
        with pytest.raises(bp.ValidationError):
            bp.segment_for('1', '')
        with pytest.raises(bp.ValidationError):
            bp.segment_for('01', '1')

    def test_A0(self, A0_8, stars8):
        assert len(A0_8) == 1369
        assert (A0_8.maxLen, A0_8.p, A0_8.r, A0_8.n) == (8, 2, 1, 0)
        assert A0_8.pairs == stars8
        for s in A0_8:
            assert HALF <= s.a[1] and s.b[1] <= ONE
            assert ZERO <= s.a[0] and s.b[0] <= ONE

    def test_A0_strips(self):
        a0 = bp.build_A0(10)
        assert len(a0) == 10682
        for s, pair in zip(a0, a0.pairs):
            gap = len(pair.u) - len(pair.v)
            assert Dyadic(1, gap + 1) <= s.a[0] and s.b[0] <= Dyadic(1, gap)
            assert HALF <= s.a[1] and s.b[1] <= ONE

    def test_empty_A0_warns(self):
        with pytest.warns(UserWarning):
            a0 = bp.build_A0(0)
        assert not a0

    def test_A1_from_one_pair(self):
        a1 = bp.build_An(bp.build_A0(1), 1)
        assert list(a1) == [
            bp.Segment((HALF, HALF), (ONE, ONE)),
            bp.Segment(point((1, 2), (1, 2)), (HALF, HALF)),
            bp.Segment(point((1, 2), (1, 1)), (HALF, ONE)),
        ]
        assert a1.n == 1

    def test_diagonal_images(self):
        a0 = bp.build_A0(1)
        for p in range(3):
            for j in range(3):
                an = bp.build_An(a0, p + j)
                expected = bp.Segment(point((1, p + j + 1), (1, j + 1)), point((1, p + j), (1, j)))
                assert expected in an

    def test_An_removes_duplicates(self, A0_8):
        a2 = bp.build_An(A0_8, 2)
        assert len(set(a2)) == len(a2)
        assert len(a2) <= 6 * len(A0_8)


class TestNesting:

    def test_word_criterion(self):
        assert bp.word_nesting(('1101', '111'), ('110100', '11100')) is bp.Nesting.CONTAINS
        assert bp.word_nesting(('110100', '11100'), ('1101', '111')) is bp.Nesting.CONTAINED
        assert bp.word_nesting(('1101', '111'), ('11010', '11')) is bp.Nesting.DISJOINT

    def test_contained_family(self):
        big = bp.StarPair('1101', '111')
        for w in bp.binary_words(2):
            small = bp.StarPair(big.u + w, big.v + w)
            assert bp.segment_nesting(big, small) is bp.Nesting.CONTAINS
            assert bp.segment_nesting(small, big) is bp.Nesting.CONTAINED

    def test_geometric_cases(self):
        diagonal = bp.Segment((ZERO, ZERO), (ONE, ONE))
        anti = bp.Segment((ZERO, HALF), (ONE, HALF))
        touching = bp.Segment((ONE, ONE), (ONE, Dyadic(3, 1)))
        overlapping = bp.Segment((HALF, HALF), (Dyadic(3, 1), Dyadic(3, 1)))
        assert bp.segment_nesting(diagonal, anti) is bp.Nesting.CROSSING
        assert bp.segment_nesting(diagonal, touching) is bp.Nesting.DISJOINT
        assert bp.segment_nesting(diagonal, overlapping) is bp.Nesting.CROSSING
        assert bp.segment_nesting(diagonal, diagonal) is bp.Nesting.CONTAINS

    @pytest.mark.slow
    def test_star_segments_never_cross(self):
        pairs = bp.enumerate_star_pairs(7)
        for first, second in itertools.combinations(pairs, 2):
            assert bp.segment_nesting(first, second) is not bp.Nesting.CROSSING

    def test_maximal_segments(self):
        a0 = bp.build_A0(6)
        top = bp.maximal_segments(a0)
        assert top.maximal
        assert bp.segment_for('1101', '111') in top
        assert bp.segment_for('110100', '11100') not in top
        for s in a0:
            assert any(t.containsSegment(s) for t in top)
        for s, t in itertools.permutations(top, 2):
            assert not t.containsSegment(s)


class TestApproximants:

    def test_stabilisation_small(self):
        a0 = bp.build_A0(5)
        for m in range(4):
            for n in range(m, 4):
                assert bp.stabilisation_check(a0, m, n)

    @pytest.mark.slow
    def test_stabilisation(self, A0_8):
        for m in range(7):
            for n in range(m, 7):
                assert bp.stabilisation_check(A0_8, m, n)

    def test_stabilisation_order(self, A0_8):
        with pytest.raises(bp.ValidationError):
            bp.stabilisation_check(A0_8, 3, 2)

    def test_witness_of_star_pair(self):
        seg, pair = bp.witness_segment('101', '11', 5)
        assert pair == ('101', '11')
        assert seg.a == point((3, 5), (5, 5))

    def test_witness_needs_completion(self):
        seg, pair = bp.witness_segment('111', '11', 3)
        assert pair == ('11100001', '1100001')
        square = bp.Square(Dyadic(3, 3), Dyadic(7, 3), Dyadic(1, 3))
        assert square.contains(seg.a) and square.contains(seg.b)

    def test_witness_every_square(self):
        n = 5
        t = bp.squares(bp.build_grid(n), 1)
        for x, y in t.anchorSet():
            if x == 0 or y == 0:
                continue
            seg, _ = bp.witness_segment(bp.rep2(y), bp.rep2(x), n)
            square = bp.Square(Dyadic(x, n), Dyadic(y, n), Dyadic(1, n))
            assert square.contains(seg.a)

    def test_witness_rejects_even(self):
        with pytest.raises(bp.ValidationError):
            bp.witness_segment('11', '1', 3)

    def test_Un(self):
        u4 = bp.build_Un_pieces(4)
        assert len(u4.squares) == 62
        assert u4.squares.name == 'U_4'

    def test_gap_family_in_zoom(self):
        a0 = bp.build_A0(10)
        for rr in range(4):
            u, v, ok = bp.family_gap(0, rr)
            s = bp.segment_for(u, v)
            assert s in a0
            assert bp.ZOOM_ACCUMULATION.containsPoint(s.a)
            assert bp.ZOOM_ACCUMULATION.containsPoint(s.b)

    def test_low_zoom_window(self):
        # lower y bound 27/2^9 instead of 257/2^9; the family lies in it as well
        low = Window(Dyadic(17, 9), Dyadic(27, 9), Dyadic(1, 4), Dyadic(17, 5))
        for rr in range(4):
            u, v, _ = bp.family_gap(0, rr)
            s = bp.segment_for(u, v)
            assert low.containsPoint(s.a) and low.containsPoint(s.b)

    def test_fine_zoom_window(self):
        for rr in range(4):
            s = bp.segment_for(*bp.family_gap(1, rr)[:2])
            assert bp.ZOOM_ACCUMULATION_FINE.containsPoint(s.a)
            assert bp.ZOOM_ACCUMULATION_FINE.containsPoint(s.b)
            coarse = bp.segment_for(*bp.family_gap(0, rr)[:2])
            assert not bp.ZOOM_ACCUMULATION_FINE.containsPoint(coarse.a)

    def test_gap_family_accumulates(self):
        for n in range(4):
            for rr in range(4):
                u, v, ok = bp.family_gap(n, rr)
                assert ok
                a = bp.segment_for(u, v).a
                assert a[0] - Dyadic(1, 5) == Dyadic(1, 8 * n + 6 + rr)
                assert a[1] - HALF == Dyadic(1, 8 * n + 6 + rr)


class TestConvergence:

    def test_small_table(self):
        rows = bp.convergence_table(2, 3, 4, grid_exp=6, approx_n=2)
        assert [row[0] for row in rows] == [2, 3]
        for n, grid_exp, estimate, bound in rows:
            assert grid_exp == 6
            assert 0 < estimate < 1
            assert bound == pytest.approx(2 ** 0.5 / 64)

    def test_empty_range(self):
        with pytest.raises(bp.ValidationError):
            bp.convergence_table(9, 3, 8)

    def test_empty_A0(self):
        with pytest.warns(UserWarning), pytest.raises(bp.GeometryError):
            bp.convergence_table(1, 2, 0)

    @pytest.fixture(scope='class')
    def table(self):
        yield bp.convergence_table(3, 9, 8, grid_exp=12)

    @pytest.mark.slow
    def test_reference_distances(self, table):
        assert [row[0] for row in table] == list(range(3, 10))
        for n, grid_exp, estimate, bound in table:
            assert bound == pytest.approx(math.sqrt(2) / 4096)
            assert estimate == pytest.approx(REFERENCE_DISTANCES[n], abs=ROUNDING)

    @pytest.mark.slow
    def test_distances_decrease_from_six(self, table):
        tail = [row for row in table if row[0] >= 6]
        for (_, _, d1, b1), (_, _, d2, b2) in zip(tail, tail[1:]):
            assert d2 <= d1 + 2 * max(b1, b2)
        assert table[-1][2] < table[0][2]

    def test_rise_at_five(self, A0_8):
        """U_5 lies farther than U_4 from (1/4, 1), the upper end of a segment of A_2."""
        assert bp.Segment(point((1, 3), (1, 1)), (Dyadic(1, 2), ONE)) in bp.build_An(A0_8, 2)
        corner = [[0.25, 1.0]]
        assert DistanceField(bp.build_Un_pieces(4))(corner)[0] == pytest.approx(1 / 16)
        assert DistanceField(bp.build_Un_pieces(5))(corner)[0] == pytest.approx(math.sqrt(5) / 32)

    @pytest.mark.slow
    def test_against_finer_sampling(self, table):
        fine = bp.convergence_table(3, 9, 8, grid_exp=16)
        for (n, _, coarse, cb), (_, _, estimate, fb) in zip(table, fine):
            assert abs(coarse - estimate) <= cb + fb
            assert estimate == pytest.approx(REFERENCE_DISTANCES[n], abs=cb + fb + ROUNDING)
