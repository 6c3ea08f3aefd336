# author: binopy contributors
# date: 2026-10-19
# version: 0.1.0

"""Deterministic Hausdorff distance between two PieceSets.

Every piece is sampled on a dyadic lattice whose per-axis step is at most
delta = 2^-grid_exp: segments at the points a + (k / N)(b - a), squares on
an (N + 1) × (N + 1) lattice including the corners, N a power of two. The
directed distance from A to B is the largest exact distance from a sample
of A to the pieces of B.

Distances to B are exact point-to-piece distances. B is cut into cells of
per-axis extent at most 2^-ANCHOR_EXP whose centers go into a
``scipy.spatial.cKDTree``; for a query point the k nearest cells are
measured exactly and k grows until every cell that could be closer has
been measured.

The maximum over the samples of A is found by branch and bound: the
distance to B is 1-Lipschitz, so a cell of A whose center distance plus
half-diagonal does not beat the best sample so far holds no better sample.
The result equals the plain maximum over all samples.

The estimate never exceeds the true distance and falls short of it by at
most delta_max·√2/2, where delta_max is the largest per-axis sampling step;
the reported error bound is √2·delta_max.
"""

import logging
import math
import warnings
from typing import NamedTuple

import numpy as np
from scipy.spatial import cKDTree

from binopy.config import config
from binopy.errors import GeometryError
from binopy.word import _requireNatural

__all__ = ['HausdorffEstimate', 'DistanceField', 'hausdorff', 'directed_hausdorff', 'sampling_step']

logger = logging.getLogger(__name__)

ANCHOR_EXP = 8
INITIAL_K = 8
BLOCK = 1 << 18  # query points times neighbours per numpy block


class HausdorffEstimate(NamedTuple):
    estimate: float
    error_bound: float


def _extent(boxes):
    return np.maximum(boxes[:, 2] - boxes[:, 0], boxes[:, 3] - boxes[:, 1])


def _parts(extent, exp):
    """Smallest power of two N with extent / N <= 2^-exp, per piece."""
    ratio = np.ldexp(extent, exp)
    parts = np.ones(len(extent), dtype=np.int64)
    big = ratio > 1
    parts[big] = np.left_shift(1, np.ceil(np.log2(ratio[big])).astype(np.int64))
    return parts


def sampling_step(boxes, grid_exp):
    """Per-axis sampling step of every piece at ``grid_exp``."""
    extent = _extent(boxes)
    return extent / _parts(extent, grid_exp)


def _subdivide(boxes, isSquare, exp):
    """Cut squares into N × N sub-squares and segments into N sub-segments."""
    parts = _parts(_extent(boxes), exp)
    cells, kinds = [], []
    for n in np.unique(parts):
        pick = parts == n
        t = np.arange(n) / n
        for square in (True, False):
            sel = boxes[pick & (isSquare == square)]
            if not len(sel):
                continue
            x0, y0, x1, y1 = sel.T
            dx, dy = (x1 - x0)[:, None], (y1 - y0)[:, None]
            if square:
                gx, gy = np.meshgrid(t, t, indexing='ij')
                gx, gy = gx.ravel()[None, :], gy.ravel()[None, :]
                lo_x, lo_y = x0[:, None] + gx * dx, y0[:, None] + gy * dy
                hi_x, hi_y = lo_x + dx / n, lo_y + dy / n
            else:
                lo_x, lo_y = x0[:, None] + t * dx, y0[:, None] + t * dy
                hi_x, hi_y = lo_x + dx / n, lo_y + dy / n
            cells.append(np.stack([lo_x, lo_y, hi_x, hi_y], axis=-1).reshape(-1, 4))
            kinds.append(np.full(cells[-1].shape[0], square))
    if not cells:
        return np.zeros((0, 4)), np.zeros(0, dtype=bool)
    return np.vstack(cells), np.concatenate(kinds)


def _distanceToCells(q, cells, isSquare):
    """Exact distances from points ``q`` (..., 2) to cells (..., 4) broadcast together."""
    qx, qy = q[..., 0], q[..., 1]
    x0, y0, x1, y1 = cells[..., 0], cells[..., 1], cells[..., 2], cells[..., 3]
    # square: per-axis clamp
    ex = np.maximum(np.maximum(x0 - qx, 0.0), qx - x1)
    ey = np.maximum(np.maximum(y0 - qy, 0.0), qy - y1)
    toSquare = np.hypot(ex, ey)
    # segment: projection clamp
    dx, dy = x1 - x0, y1 - y0
    length2 = dx * dx + dy * dy
    safe = np.where(length2 > 0, length2, 1.0)
    t = np.clip(((qx - x0) * dx + (qy - y0) * dy) / safe, 0.0, 1.0)
    toSegment = np.hypot(qx - (x0 + t * dx), qy - (y0 + t * dy))
    return np.where(isSquare, toSquare, toSegment)


class DistanceField:
    """Exact Euclidean distance from points to the union of a PieceSet."""

    def __init__(self, pieces, anchor_exp=ANCHOR_EXP) -> None:
        boxes, isSquare = pieces.floatBoxes()
        if not len(boxes):
            raise GeometryError(f'{pieces!r} is empty')
        self._cells, self._isSquare = _subdivide(boxes, isSquare, anchor_exp)
        self._centers = np.column_stack([
            (self._cells[:, 0] + self._cells[:, 2]) / 2,
            (self._cells[:, 1] + self._cells[:, 3]) / 2,
        ])
        self._rho = float(np.max(np.hypot(self._cells[:, 2] - self._cells[:, 0],
                                          self._cells[:, 3] - self._cells[:, 1]))) / 2
        self._tree = cKDTree(self._centers)
        logger.debug('distance field of %r: %d cells', pieces, len(self._cells))

    @property
    def ncells(self):
        return len(self._cells)

    def _measure(self, q, k):
        dd, ii = self._tree.query(q, k=k)
        dd, ii = dd.reshape(len(q), k), ii.reshape(len(q), k)
        d = _distanceToCells(q[:, None, :], self._cells[ii], self._isSquare[ii]).min(axis=1)
        return d, dd[:, -1]

    def __call__(self, points):
        points = np.asarray(points, dtype=float).reshape(-1, 2)
        dist = np.empty(len(points))
        todo = np.arange(len(points))
        k = min(INITIAL_K, self.ncells)
        while len(todo):
            block = max(1, BLOCK // k)
            unresolved = []
            for start in range(0, len(todo), block):
                idx = todo[start:start + block]
                d, kth = self._measure(points[idx], k)
                dist[idx] = d
                if k < self.ncells:
                    # a closer cell has its center within d + rho
                    unresolved.append(idx[kth <= d + self._rho])
            todo = np.concatenate(unresolved) if unresolved else todo[:0]
            k = min(4 * k, self.ncells)
        return dist


def _corners(cells, isSquare):
    x0, y0, x1, y1 = cells.T
    pts = [np.column_stack([x0, y0]), np.column_stack([x1, y1])]
    sq = isSquare
    pts += [np.column_stack([x1[sq], y0[sq]]), np.column_stack([x0[sq], y1[sq]])]
    return np.vstack(pts)


def _split(cells, isSquare):
    x0, y0, x1, y1 = cells.T
    mx, my = (x0 + x1) / 2, (y0 + y1) / 2
    sq, sg = isSquare, ~isSquare
    children = [
        np.column_stack([x0[sq], y0[sq], mx[sq], my[sq]]),
        np.column_stack([mx[sq], y0[sq], x1[sq], my[sq]]),
        np.column_stack([x0[sq], my[sq], mx[sq], y1[sq]]),
        np.column_stack([mx[sq], my[sq], x1[sq], y1[sq]]),
        np.column_stack([x0[sg], y0[sg], mx[sg], my[sg]]),
        np.column_stack([mx[sg], my[sg], x1[sg], y1[sg]]),
    ]
    nsq, nsg = int(sq.sum()), int(sg.sum())
    flags = np.concatenate([np.ones(4 * nsq, dtype=bool), np.zeros(2 * nsg, dtype=bool)])
    return np.vstack(children), flags


def directed_hausdorff(a, field, grid_exp):
    """Largest distance from a sample of PieceSet ``a`` to the pieces behind ``field``."""
    cells, isSquare = a.floatBoxes()
    if not len(cells):
        raise GeometryError(f'{a!r} is empty')
    delta = math.ldexp(1.0, -grid_exp)
    best = 0.0
    level = 0
    while len(cells):
        best = max(best, float(field(_corners(cells, isSquare)).max()))
        open_ = _extent(cells) > delta
        cells, isSquare = cells[open_], isSquare[open_]
        if not len(cells):
            break
        centers = np.column_stack([(cells[:, 0] + cells[:, 2]) / 2, (cells[:, 1] + cells[:, 3]) / 2])
        rho = np.hypot(cells[:, 2] - cells[:, 0], cells[:, 3] - cells[:, 1]) / 2
        keep = field(centers) + rho > best
        cells, isSquare = _split(cells[keep], isSquare[keep])
        level += 1
        logger.debug('level %d: best %.6g, %d open cells', level, best, len(cells))
    return best


def hausdorff(a, b, grid_exp=None, grid_exp_cap=None):
    """Estimate d_h(a, b) between two non-empty PieceSets.

    Args:
        a, b (PieceSet): operands
        grid_exp (int, optional): sampling step 2^-grid_exp, default ``config.gridExp``
        grid_exp_cap (int, optional): overrides ``config.gridExpCap``

    Returns:
        HausdorffEstimate: (estimate, error_bound) with
        estimate <= d_h(a, b) <= estimate + error_bound
    """
    grid_exp = config.gridExp if grid_exp is None else grid_exp
    _requireNatural(grid_exp, 'grid_exp')
    config.checkCap('grid_exp', grid_exp, 'gridExpCap', grid_exp_cap)
    if a.isEmpty or b.isEmpty:
        raise GeometryError('the Hausdorff distance needs two non-empty sets')
    boxesA, _ = a.floatBoxes()
    boxesB, _ = b.floatBoxes()
    steps = np.concatenate([sampling_step(boxesA, grid_exp), sampling_step(boxesB, grid_exp)])
    extent = np.concatenate([_extent(boxesA), _extent(boxesB)])
    delta = math.ldexp(1.0, -grid_exp)
    if extent.min() < delta:
        warnings.warn(f'some pieces are smaller than the sampling step 2^-{grid_exp}; they are sampled at their corners only')
    forward = directed_hausdorff(a, DistanceField(b), grid_exp)
    backward = directed_hausdorff(b, DistanceField(a), grid_exp)
    estimate = max(forward, backward)
    bound = math.sqrt(2) * float(steps.max())
    logger.debug('d_h(%r, %r) ~ %.6g (+ %.3g) at grid_exp %d', a, b, estimate, bound, grid_exp)
    return HausdorffEstimate(estimate, bound)
