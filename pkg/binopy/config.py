# author: binopy contributors
# date: 2026-10-19
# version: 0.1.0

from binopy.base import Item
from binopy.errors import CapExceededError

__all__ = ['Config', 'config', 'DEFAULTS']

DEFAULTS = {
    'depthCap': 12,      # triangle depth, grid of 4096 x 4096 cells
    'starCap': 14,       # longest u in star enumeration and A_0
    'gridExp': 12,       # Hausdorff sampling 2^-gridExp
    'gridExpCap': 16,
    'canvasPx': 512,
    'strokeWidth': 1.0,
    'approxN': 4,        # the A_n compared against U_n in convergence tables
}


class Config(Item):
    """Caps and defaults read by the library at call time."""

    def __init__(self, name='default', **attr) -> None:
        super().__init__(name, **DEFAULTS)
        self.update(attr)

    def reset(self):
        self.update(DEFAULTS)

    def checkCap(self, what, value, capName, cap=None):
        """Raise CapExceededError when ``value`` is above the cap ``capName``.

        An explicit ``cap`` overrides the configured one.
        """
        limit = getattr(self, capName) if cap is None else cap
        if value > limit:
            raise CapExceededError(what, value, limit)
        return value


config = Config()
