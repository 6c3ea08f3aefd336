# author: binopy contributors
# date: 2026-10-19
# version: 0.1.0

"""Plain-text bitmaps (P1): header line, "W H" line, then one line of space-separated bits per row."""

from typing import BinaryIO

import numpy as np

from binopy.errors import ValidationError

__all__ = ['pbm_bytes', 'write_pbm', 'parse_pbm', 'read_pbm_bits']


def pbm_bytes(bits) -> bytes:
    bits = np.asarray(bits, dtype=np.uint8)
    h, w = bits.shape
    header = f'P1\n{w} {h}\n'.encode('ascii')
    # '0'/'1' interleaved with spaces, newline-terminated rows
    cells = np.full((h, 2 * w), ord(' '), dtype=np.uint8)
    cells[:, 0::2] = bits + ord('0')
    cells[:, -1] = ord('\n')
    return header + cells.tobytes()


def write_pbm(fileobj: BinaryIO, bits):
    fileobj.write(pbm_bytes(bits))


def parse_pbm(data):
    """Bits of a P1 document as a (H, W) uint8 array; '#' comments and any whitespace are accepted."""
    if isinstance(data, bytes):
        data = data.decode('ascii')
    tokens = []
    for line in data.splitlines():
        tokens.extend(line.split('#', 1)[0].split())
    if not tokens or tokens[0] != 'P1':
        raise ValidationError('not a plain PBM (P1) document')
    try:
        w, h = int(tokens[1]), int(tokens[2])
    except (IndexError, ValueError):
        raise ValidationError('P1 header lacks width and height') from None
    # bits may also be packed without separators
    body = ''.join(tokens[3:])
    if len(body) != w * h or body.strip('01'):
        raise ValidationError(f'P1 body holds {len(body)} bits, expected {w} x {h}')
    return (np.frombuffer(body.encode('ascii'), dtype=np.uint8) - ord('0')).reshape(h, w)


def read_pbm_bits(fileobj: BinaryIO):
    return parse_pbm(fileobj.read())
