# author: binopy contributors
# date: 2026-10-19
# version: 0.1.0

__all__ = ['Item']


class Item:
    """Named container whose extra keyword attributes describe where it came from.

    Every collection in binopy (grids, square sets, segment sets, piece sets)
    carries its provenance this way, e.g. ``SegmentSet('A_4', maxLen=8, p=2, r=1, n=4)``.
    """

    def __init__(self, name, **attr) -> None:
        self._name = name
        self._itemType = self.__class__.__name__
        self.update(attr)

    @property
    def itemType(self):
        return self._itemType

    def __repr__(self) -> str:
        return f'< {self._itemType} {self._name} >'

    def update(self, attr):
        for k, v in attr.items():
            setattr(self, k, v)

    @property
    def properties(self):
        return {k: v for k, v in self.__dict__.items() if not k.startswith('_')}

    @property
    def name(self):
        return self._name

    @name.setter
    def name(self, name):
        self._name = name
