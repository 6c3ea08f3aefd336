# author: binopy contributors
# date: 2026-10-19
# version: 0.1.0

__all__ = [
    'BinopyError',
    'ValidationError',
    'WordError',
    'ModulusError',
    'CapExceededError',
    'StarConditionError',
    'GeometryError',
    'VerificationError',
]


class BinopyError(Exception):
    pass


class ValidationError(BinopyError, ValueError):
    """Bad input or violated precondition; the CLI exits with status 2."""


class WordError(ValidationError):
    pass


class ModulusError(ValidationError):
    pass


class CapExceededError(ValidationError):

    def __init__(self, what, value, cap) -> None:
        super().__init__(f'{what}={value} exceeds the configured cap {cap}')
        self.what = what
        self.value = value
        self.cap = cap


class StarConditionError(ValidationError):
    pass


class GeometryError(ValidationError):
    pass


class VerificationError(BinopyError, AssertionError):
    """A result failed its own re-verification; the CLI exits with status 1."""
