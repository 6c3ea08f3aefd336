"""
binopy
========
binopy computes binomial coefficients of binary words, builds the
generalized Pascal triangle modulo a prime, enumerates the pairs of words
whose square families never leave a residue class, and approximates the
compact set the scaled triangles converge to.
"""

__version__ = "0.1.0"

# These are import orderwise
from binopy.errors import *
from binopy.config import config, Config
from binopy.word import *
from binopy.modulus import *
from binopy.square import Square, SquareSet
from binopy.triangle import *
from binopy.star import *
from binopy.dyadic import Dyadic, asDyadic
from binopy.segment import Segment, SegmentSet
from binopy.pieces import *
from binopy.algorithms import *
from binopy.fractal import *
from binopy.render import *
from binopy.ioapi import *
