# author: binopy contributors
# date: 2026-10-19
# version: 0.1.0

"""JSON and CSV artifacts: square sets, segment sets, star pair lists and tables."""

import csv
import json
from typing import TextIO

__all__ = [
    'COUNTS_FIELDS',
    'PAIRS_FIELDS',
    'CONVERGENCE_FIELDS',
    'write_json',
    'read_json',
    'write_csv',
    'read_csv',
    'pairs_to_dict',
]

COUNTS_FIELDS = ('n', 'squares', 'positive_pairs')
PAIRS_FIELDS = ('u', 'v', 'p', 'r')
CONVERGENCE_FIELDS = ('n', 'grid_exp', 'estimate', 'error_bound')


def _payload(obj):
    if hasattr(obj, 'toDict'):
        return obj.toDict()
    if isinstance(obj, (list, tuple)):
        return [_payload(o) for o in obj]
    return obj


def write_json(fileobj: TextIO, obj):
    """Write ``obj`` (anything with ``toDict``, a list of such, or plain data) as indented JSON."""
    json.dump(_payload(obj), fileobj, indent=2)
    fileobj.write('\n')


def read_json(fileobj: TextIO):
    return json.load(fileobj)


def pairs_to_dict(pairs, max_len=None):
    pairs = list(pairs)
    return {'max_len': max_len, 'count': len(pairs), 'pairs': [pair.toDict() for pair in pairs]}


def write_csv(fileobj: TextIO, fields, rows):
    """One header line, then one line per row; rows are tuples in ``fields`` order or dicts."""
    writer = csv.writer(fileobj, lineterminator='\n')
    writer.writerow(fields)
    for row in rows:
        if isinstance(row, dict):
            row = [row[f] for f in fields]
        elif hasattr(row, 'toDict'):
            d = row.toDict()
            row = [d[f] for f in fields]
        writer.writerow([repr(v) if isinstance(v, float) else v for v in row])


def read_csv(fileobj: TextIO):
    """Rows as dicts of strings."""
    return list(csv.DictReader(fileobj))
