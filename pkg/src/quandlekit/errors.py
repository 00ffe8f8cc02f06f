"""Exception types shared across quandlekit."""


class InputError(ValueError):
    """Malformed or mathematically invalid input (bad table, non-cocycle, ...)."""


class InfeasibleSizeError(RuntimeError):
    """The requested computation exceeds the tuple-count guard."""


class UnsupportedError(NotImplementedError):
    """A well-formed request outside what the library computes."""
