# author: binopy contributors
# date: 2026-10-19
# version: 0.1.0

"""Segments S_{u,v}, the approximants A_n and U_n, and their comparison.

For a (⋆)_r pair (u, v) the segment S_{u,v} has slope 1, lower endpoint

    A_{u,v} = (0.0^(|u|-|v|)v, 0.u)

and upper endpoint A_{u,v} + (2^-|u|, 2^-|u|). A_0 is the union of these
segments (truncated here to |u| <= max_len), and

    A_n = union of h^j(c^i(A_0)) over 0 <= j <= i <= n.

Both A_n and U_n converge to the same compact limit set in the Hausdorff
metric; ``convergence_table`` measures the distance between them.
"""

import logging
import warnings
from enum import Enum

from binopy.algorithms.clipping import Window, clip_segment, line_key, segment_normal_form
from binopy.algorithms.hausdorff import hausdorff
from binopy.config import config
from binopy.dyadic import ONE, ZERO, Dyadic
from binopy.errors import GeometryError, ValidationError, VerificationError
from binopy.modulus import MOD2
from binopy.pieces import PieceSet
from binopy.segment import Segment, SegmentSet, orientation
from binopy.star import StarPair, complete_to_star, enumerate_star_pairs, satisfies_star
from binopy.triangle import build_grid, squares
from binopy.word import _requireNatural, asWord, binom_words

__all__ = [
    'Nesting',
    'ZOOM_ACCUMULATION',
    'ZOOM_ACCUMULATION_FINE',
    'segment_for',
    'build_A0',
    'build_An',
    'segment_nesting',
    'word_nesting',
    'maximal_segments',
    'build_Un_pieces',
    'stabilisation_check',
    'witness_segment',
    'convergence_table',
]

logger = logging.getLogger(__name__)

# segments of the gap family for n = 0, 1 and rr = 0..3 accumulate at (1/32, 1/2)
ZOOM_ACCUMULATION = Window(Dyadic(17, 9), Dyadic(257, 9), Dyadic(1, 4), Dyadic(17, 5))
ZOOM_ACCUMULATION_FINE = Window(Dyadic(4097, 17), Dyadic(65537, 17), Dyadic(257, 13), Dyadic(4097, 13))


class Nesting(Enum):
    CONTAINS = 'contains'
    CONTAINED = 'contained'
    DISJOINT = 'disjoint-or-endpoint'
    # meet in a point that is not a common endpoint, or overlap partially
    CROSSING = 'crossing'


def segment_for(u, v) -> Segment:
    """S_{u,v} for canonical words with |u| >= |v| >= 1."""
    u, v = asWord(u), asWord(v)
    if not (u.isCanonical and v.isCanonical):
        raise ValidationError(f'({u.bits}, {v.bits}) are not both canonical')
    if not len(u) >= len(v) >= 1:
        raise ValidationError(f'S_(u,v) needs |u| >= |v| >= 1, got |u|={len(u)}, |v|={len(v)}')
    n = len(u)
    # x = 0.0^(|u|-|v|)v, y = 0.u
    a = (Dyadic(v.value, n), Dyadic.fromWord(u))
    side = Dyadic(1, n)
    return Segment(a, (a[0] + side, a[1] + side))


def build_A0(max_len, m=MOD2, star_cap=None) -> SegmentSet:
    """Truncation of A_0 to the segments S_{u,v} with |u| <= ``max_len``.

    The segments left out are all shorter than √2·2^-(max_len+1).
    """
    pairs = enumerate_star_pairs(max_len, m, star_cap)
    if not pairs:
        warnings.warn(f'no (⋆) pair with |u| <= {max_len}: the truncation of A_0 is empty')
    segs = [segment_for(pair.u, pair.v) for pair in pairs]
    logger.debug('A_0 truncated at %d: %d segments', max_len, len(segs))
    return SegmentSet('A_0', segs, pairs=pairs, maxLen=max_len, p=m.p, r=m.r, n=0)


def build_An(a0, n) -> SegmentSet:
    """Union of h^j(c^i(a0)) for 0 <= j <= i <= n.

    Exact duplicates are removed; the first occurrence in the order
    (i, j, position in a0) is kept.
    """
    _requireNatural(n)
    seen = set()
    segs = []
    for i in range(n + 1):
        base = [s.halved(i) for s in a0]
        for j in range(i + 1):
            for s in base:
                image = s.stretched(j) if j else s
                if image not in seen:
                    seen.add(image)
                    segs.append(image)
    attr = {k: v for k, v in a0.properties.items() if k != 'n'}
    logger.debug('A_%d: %d segments from %d', n, len(segs), len(a0))
    return SegmentSet(f'A_{n}', segs, **attr, n=n)


def word_nesting(first, second) -> Nesting:
    """Word criterion: (u, v) contains (s, t) iff s = uw and t = vz with |w| = |z|."""
    (u, v), (s, t) = (tuple(asWord(w).bits for w in first), tuple(asWord(w).bits for w in second))

    def _extends(big, small):
        (bu, bv), (su, sv) = big, small
        return su.startswith(bu) and sv.startswith(bv) and len(su) - len(bu) == len(sv) - len(bv)

    if _extends((u, v), (s, t)):
        return Nesting.CONTAINS
    if _extends((s, t), (u, v)):
        return Nesting.CONTAINED
    return Nesting.DISJOINT


def _geometricNesting(s1, s2):
    if s1.containsSegment(s2):
        return Nesting.CONTAINS
    if s2.containsSegment(s1):
        return Nesting.CONTAINED
    o1, o2 = orientation(s1.a, s1.b, s2.a), orientation(s1.a, s1.b, s2.b)
    o3, o4 = orientation(s2.a, s2.b, s1.a), orientation(s2.a, s2.b, s1.b)
    if o1 * o2 < 0 and o3 * o4 < 0:
        return Nesting.CROSSING
    if o1 == o2 == o3 == o4 == 0:
        # collinear: overlapping without containment, or touching at one point
        lo = max(s1.a, s2.a)
        hi = min(s1.b, s2.b)
        return Nesting.CROSSING if lo < hi else Nesting.DISJOINT
    shared = {s1.a, s1.b} & {s2.a, s2.b}
    touches = [p for p in (s2.a, s2.b) if s1.containsPoint(p)] + [p for p in (s1.a, s1.b) if s2.containsPoint(p)]
    if any(p not in shared for p in touches):
        return Nesting.CROSSING
    return Nesting.DISJOINT


def segment_nesting(first, second) -> Nesting:
    """Relative position of two segments.

    Each argument is a Segment, a StarPair or a (u, v) word pair. Pairs are
    turned into S_{u,v}; when both arguments are pairs the geometric answer
    is checked against the word criterion.
    """
    def _segment(x):
        if isinstance(x, Segment):
            return x, None
        u, v = x
        return segment_for(u, v), (u, v)

    (s1, w1), (s2, w2) = _segment(first), _segment(second)
    result = _geometricNesting(s1, s2)
    if w1 is not None and w2 is not None:
        m1 = first.modulus if isinstance(first, StarPair) else MOD2
        m2 = second.modulus if isinstance(second, StarPair) else MOD2
        if satisfies_star(*w1, m1) and satisfies_star(*w2, m2):
            expected = word_nesting(w1, w2)
            if result is not expected:
                raise VerificationError(f'{s1!r} vs {s2!r}: geometry says {result.value}, words say {expected.value}')
    return result


def maximal_segments(s) -> SegmentSet:
    """The segments of ``s`` contained in no other segment of ``s`` (one copy of equal segments).

    A sweep along every supporting line; the input order is kept.
    """
    lines = {}
    for k, seg in enumerate(s):
        lines.setdefault(line_key(seg), []).append(k)
    keep = set()
    for members in lines.values():
        # by start ascending, end descending: a segment is covered iff an earlier one reaches its end
        members.sort(key=lambda k: (s[k].a, tuple(-c for c in s[k].b), k))
        reach = None
        for k in members:
            if reach is None or reach < s[k].b:
                keep.add(k)
                reach = s[k].b
    segs = [seg for k, seg in enumerate(s) if k in keep]
    pairs = None if s.pairs is None else [pair for k, pair in enumerate(s.pairs) if k in keep]
    attr = {k: v for k, v in s.properties.items() if k != 'maximal'}
    return SegmentSet(f'{s.name} maximal', segs, pairs=pairs, **attr, maximal=True)


def build_Un_pieces(n, m=MOD2, depth_cap=None) -> PieceSet:
    """U_{n,r} = T_{n,r} / 2^n as a PieceSet of squares of side 2^-n."""
    grid = build_grid(n, m.p, depth_cap=depth_cap)
    un = squares(grid, m.r).scaled(n, name=f'U_{n}')
    return PieceSet.fromSquares(un)


def _strip(m):
    return Window(Dyadic(1, m + 1), ZERO, ONE, ONE)


def _stripNormalForm(segset, m):
    window = _strip(m)
    clipped = [clip_segment(seg, window) for seg in segset]
    return segment_normal_form([seg for seg in clipped if seg is not None])


def stabilisation_check(a0, mSmall, nLarge) -> bool:
    """A_m and A_n agree on the strip [1/2^(m+1), 1] × [0, 1] for m <= n.

    Both sides are clipped exactly and reduced to merged collinear runs.
    Isolated points are not compared: the point (1/2^(m+1), 1) is the
    upper endpoint of c^(m+1)h^(m+1) images and lies in A_n but not in A_m.
    """
    _requireNatural(mSmall, 'mSmall')
    _requireNatural(nLarge, 'nLarge')
    if mSmall > nLarge:
        raise ValidationError(f'mSmall={mSmall} exceeds nLarge={nLarge}')
    small = _stripNormalForm(build_An(a0, mSmall), mSmall)
    large = _stripNormalForm(build_An(a0, nLarge), mSmall)
    return small == large


def witness_segment(u, v, n, m=MOD2):
    """A segment of A_{n-|u|} starting at the anchor of the (u, v) square of U_n, or inside it.

    For a (⋆)_r pair this is c^(n-|u|)(S_{u,v}), whose lower endpoint is the
    anchor itself. Otherwise (u, v) is first completed to a (⋆)_r pair and the
    resulting segment lies in the interior of the square.

    Returns:
        (Segment, StarPair): the segment and the pair it comes from
    """
    u, v = asWord(u), asWord(v)
    if not (u.isCanonical and v.isCanonical) or u.isEmpty or v.isEmpty:
        raise ValidationError(f'witness segments need non-empty canonical words, got ({u.bits}, {v.bits})')
    if len(u) > n:
        raise ValidationError(f'|u| = {len(u)} exceeds n = {n}')
    if not m.matches(binom_words(u, v)):
        raise ValidationError(f'binom({u.bits}, {v.bits}) is not ≡ {m.r} mod {m.p}')
    if satisfies_star(u, v, m):
        pair = StarPair(u, v, m, check=False)
    else:
        k = 0
        while m.p ** k <= len(u):
            k += 1
        pair = complete_to_star(u, v, k, m)
    seg = segment_for(pair.u, pair.v).halved(n - len(u))
    return seg, pair


def convergence_table(n_min, n_max, max_len, grid_exp=None, m=MOD2, approx_n=None,
                      depth_cap=None, star_cap=None):
    """Rows (n, grid_exp, estimate, error_bound) of d_h(U_{n,r}, A_approx_n) for n_min <= n <= n_max."""
    _requireNatural(n_min, 'n_min')
    _requireNatural(n_max, 'n_max')
    if n_min > n_max:
        raise ValidationError(f'empty range: n_min={n_min} > n_max={n_max}')
    config.checkCap('n', n_max, 'depthCap', depth_cap)
    grid_exp = config.gridExp if grid_exp is None else grid_exp
    approx_n = config.approxN if approx_n is None else approx_n
    a0 = build_A0(max_len, m, star_cap)
    if not a0:
        raise GeometryError(f'A_0 truncated at max_len={max_len} is empty')
    approx = PieceSet.fromSegments(build_An(a0, approx_n))
    rows = []
    for n in range(n_min, n_max + 1):
        un = build_Un_pieces(n, m, depth_cap)
        if un.isEmpty:
            raise GeometryError(f'U_{n} has no square with residue {m.r} mod {m.p}')
        estimate, bound = hausdorff(un, approx, grid_exp)
        logger.info('n=%d grid_exp=%d d_h=%.6g bound=%.3g', n, grid_exp, estimate, bound)
        rows.append((n, grid_exp, estimate, bound))
    return rows
