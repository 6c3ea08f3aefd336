from binopy.algorithms.clipping import *
from binopy.algorithms.hausdorff import *
