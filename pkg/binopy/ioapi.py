# author: binopy contributors
# date: 2026-10-19
# version: 0.1.0

"""Path-level readers and writers.

Every writer goes through a temporary file in the target directory and an
``os.replace``, so a reader never sees a half-written artifact.
"""

import contextlib
import logging
import os
import tempfile

from binopy.io.export import pairs_to_dict, read_csv, read_json, write_csv, write_json
from binopy.io.svg import read_svg, write_svg
from binopy.render import RasterImage, read_pbm

__all__ = [
    'atomic_open',
    'toPBM',
    'fromPBM',
    'toSVG',
    'fromSVG',
    'toJSON',
    'fromJSON',
    'toCSV',
    'fromCSV',
    'pairsToJSON',
]

logger = logging.getLogger(__name__)


@contextlib.contextmanager
def atomic_open(path, mode='w'):
    """Open a temporary sibling of ``path`` and move it over ``path`` on success."""
    path = os.fspath(path)
    directory = os.path.dirname(os.path.abspath(path))
    binary = 'b' in mode
    tmp = tempfile.NamedTemporaryFile(
        mode='wb' if binary else 'w',
        dir=directory,
        prefix='.' + os.path.basename(path) + '.',
        suffix='.tmp',
        delete=False,
        **({} if binary else {'encoding': 'utf-8', 'newline': ''}),
    )
    try:
        with tmp:
            yield tmp
        os.replace(tmp.name, path)
    except BaseException:
        with contextlib.suppress(OSError):
            os.unlink(tmp.name)
        raise
    logger.debug('wrote %s', path)


def toPBM(image, path):
    """Write a RasterImage as P1."""
    with atomic_open(path, 'wb') as f:
        f.write(image.toPBM())


def fromPBM(path) -> RasterImage:
    with open(path, 'rb') as f:
        return read_pbm(f)


def toSVG(doc, path):
    with atomic_open(path) as f:
        write_svg(f, doc)


def fromSVG(path):
    with open(path, 'r', encoding='utf-8') as f:
        return read_svg(f)


def toJSON(obj, path):
    with atomic_open(path) as f:
        write_json(f, obj)


def fromJSON(path):
    with open(path, 'r', encoding='utf-8') as f:
        return read_json(f)


def pairsToJSON(pairs, path, max_len=None):
    toJSON(pairs_to_dict(pairs, max_len), path)


def toCSV(fields, rows, path):
    with atomic_open(path) as f:
        write_csv(f, fields, rows)


def fromCSV(path):
    with open(path, 'r', encoding='utf-8', newline='') as f:
        return read_csv(f)
