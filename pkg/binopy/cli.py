# author: binopy contributors
# date: 2026-10-19
# version: 0.1.0

"""Command-line front end.

Example:
    binopy coeff 101001 101
    binopy triangle --n 7 --p 3 --r 2 --format pbm --out u72.pbm
    binopy stars --max-len 8 --format csv --out pairs.csv
    binopy fractal --max-len 8 --n 4 --out a4.svg --json a4.json
    binopy converge 3 9 --max-len 8 --out converge.csv
    binopy counts --n-max 10 --out counts.csv

Standard output lines are stable. Diagnostics go to standard error; exit
status is 0 on success, 2 on invalid input and 1 when a result fails its
own re-verification.
"""

import argparse
import logging
import sys

from binopy import ioapi
from binopy.errors import GeometryError, ValidationError, VerificationError
from binopy.fractal import ZOOM_ACCUMULATION, ZOOM_ACCUMULATION_FINE, build_A0, build_An, convergence_table
from binopy.io.export import CONVERGENCE_FIELDS, COUNTS_FIELDS, PAIRS_FIELDS
from binopy.modulus import Modulus
from binopy.pieces import PieceSet
from binopy.render import render_grid_pbm, render_pieces_svg, render_zoom
from binopy.star import enumerate_star_pairs
from binopy.triangle import build_grid, squares, unit_square_table
from binopy.word import Word, binom_words

__all__ = ['main', 'build_parser']

logger = logging.getLogger('binopy')

ZOOMS = {
    'accumulation': ZOOM_ACCUMULATION,
    'accumulation-fine': ZOOM_ACCUMULATION_FINE,
}


def _modulus(args):
    return Modulus(args.p, args.r)


def cmd_coeff(args):
    u, v = Word(args.u), Word(args.v)
    exact = binom_words(u, v)
    if args.p is None:
        print(exact)
    else:
        print(exact, Modulus(args.p).residue(exact))
    return 0


def cmd_triangle(args):
    m = _modulus(args)
    grid = build_grid(args.n, m.p, depth_cap=args.depth_cap)
    t = squares(grid, m.r)
    if args.out:
        if args.format == 'pbm':
            image, _ = render_grid_pbm(grid, m.r)
            ioapi.toPBM(image, args.out)
        else:
            ioapi.toJSON(t, args.out)
    print(t.nsquares)
    return 0


def cmd_stars(args):
    m = _modulus(args)
    pairs = enumerate_star_pairs(args.max_len, m, star_cap=args.star_cap)
    if args.out:
        if args.format == 'csv':
            ioapi.toCSV(PAIRS_FIELDS, pairs, args.out)
        else:
            ioapi.pairsToJSON(pairs, args.out, args.max_len)
    count = len(pairs)
    if args.include_empty and m.r == 1:
        count += 1
    print(count)
    return 0


def cmd_fractal(args):
    m = _modulus(args)
    a0 = build_A0(args.max_len, m, star_cap=args.star_cap)
    if not a0:
        raise GeometryError(f'A_0 truncated at max-len {args.max_len} is empty')
    an = build_An(a0, args.n)
    pieces = PieceSet.fromSegments(an)
    if args.out:
        if args.zoom:
            doc = render_zoom(pieces, ZOOMS[args.zoom], args.canvas_px, args.stroke_width)
        else:
            doc = render_pieces_svg(pieces, args.stroke_width, args.canvas_px)
        ioapi.toSVG(doc, args.out)
    if args.json:
        ioapi.toJSON(an, args.json)
    print(len(an))
    return 0


def cmd_converge(args):
    m = _modulus(args)
    rows = convergence_table(
        args.n_min, args.n_max, args.max_len,
        grid_exp=args.grid_exp, m=m, approx_n=args.approx_n,
        depth_cap=args.depth_cap, star_cap=args.star_cap,
    )
    if args.out:
        ioapi.toCSV(CONVERGENCE_FIELDS, rows, args.out)
    for n, grid_exp, estimate, bound in rows:
        print(f'{n} {grid_exp} {estimate:.9f} {bound:.9f}')
    return 0


def cmd_counts(args):
    rows = unit_square_table(args.n_max, depth_cap=args.depth_cap)
    if args.out:
        ioapi.toCSV(COUNTS_FIELDS, rows, args.out)
    for row in rows:
        print(*row)
    return 0


def _natural(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f'{text} is negative')
    return value


def _addModulus(parser):
    parser.add_argument('--p', type=int, default=2, help='prime modulus (default 2)')
    parser.add_argument('--r', type=int, default=1, help='residue class in 1..p-1 (default 1)')


def build_parser():
    ap = argparse.ArgumentParser(prog='binopy', description='Pascal triangles of binary words and their limit sets.')
    ap.add_argument('-v', '--verbose', action='count', default=0, help='-v for progress, -vv for debugging')
    ap.add_argument('--depth-cap', type=_natural, default=None, help='largest triangle depth n')
    ap.add_argument('--star-cap', type=_natural, default=None, help='longest u in star enumeration')
    sub = ap.add_subparsers(dest='command', required=True)

    p = sub.add_parser('coeff', help='binomial coefficient of two binary words')
    p.add_argument('u', help="binary word; '' or ε for the empty word")
    p.add_argument('v')
    p.add_argument('--p', type=int, default=None, help='also print the residue mod p')
    p.set_defaults(func=cmd_coeff)

    p = sub.add_parser('triangle', help='squares of T_{n,r}')
    p.add_argument('--n', type=_natural, required=True)
    _addModulus(p)
    p.add_argument('--format', choices=('pbm', 'json'), default='pbm')
    p.add_argument('--out', default=None)
    p.set_defaults(func=cmd_triangle)

    p = sub.add_parser('stars', help='pairs satisfying the star condition')
    p.add_argument('--max-len', type=_natural, required=True)
    _addModulus(p)
    p.add_argument('--format', choices=('json', 'csv'), default='json')
    p.add_argument('--out', default=None)
    p.add_argument('--include-empty', action='store_true', help='also count (ε, ε) when r = 1: --max-len 8 then prints 1370 instead of 1369')
    p.set_defaults(func=cmd_stars)

    p = sub.add_parser('fractal', help='segments of the approximant A_n')
    p.add_argument('--max-len', type=_natural, required=True)
    p.add_argument('--n', type=_natural, required=True)
    _addModulus(p)
    p.add_argument('--out', default=None, help='SVG drawing')
    p.add_argument('--json', default=None, help='segment list')
    p.add_argument('--zoom', choices=sorted(ZOOMS), default=None)
    p.add_argument('--canvas-px', type=int, default=None)
    p.add_argument('--stroke-width', type=float, default=None)
    p.set_defaults(func=cmd_fractal)

    p = sub.add_parser('converge', help='Hausdorff distances between U_n and A_approx')
    p.add_argument('n_min', type=_natural)
    p.add_argument('n_max', type=_natural)
    p.add_argument('--max-len', type=_natural, default=8)
    p.add_argument('--grid-exp', type=_natural, default=None)
    p.add_argument('--approx-n', type=_natural, default=None)
    _addModulus(p)
    p.add_argument('--out', default=None)
    p.set_defaults(func=cmd_converge)

    p = sub.add_parser('counts', help='unit squares and positive pairs of T_n')
    p.add_argument('--n-max', type=_natural, required=True)
    p.add_argument('--out', default=None)
    p.set_defaults(func=cmd_counts)
    return ap


def _oneLine(exc):
    return ' '.join(str(exc).split())


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    level = {0: logging.WARNING, 1: logging.INFO}.get(args.verbose, logging.DEBUG)
    logging.basicConfig(level=level, stream=sys.stderr, format='%(levelname)s %(name)s: %(message)s')
    logging.captureWarnings(True)
    try:
        return args.func(args)
    except VerificationError as e:
        print(f'binopy: verification failed: {_oneLine(e)}', file=sys.stderr)
        return 1
    except (ValidationError, OSError) as e:
        print(f'binopy: error: {_oneLine(e)}', file=sys.stderr)
        return 2


if __name__ == '__main__':
    raise SystemExit(main())
