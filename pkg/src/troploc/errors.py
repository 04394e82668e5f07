"""Exception hierarchy shared by every layer of the package."""


class TropicalError(ValueError):
    """Base class for all errors raised by :mod:`troploc`."""


class InvertZeroError(TropicalError):
    pass


class ZeroPowerError(TropicalError):
    pass


class DimensionMismatchError(TropicalError):
    pass


class ZeroEntryError(TropicalError):
    pass


class NotSquareError(TropicalError):
    pass


class ReducibleError(TropicalError):
    """The matrix is reducible.

    ``source`` and ``target`` are 0-based indices such that no path
    ``source -> target`` exists in the support digraph.
    """

    def __init__(self, source: int, target: int):
        self.source = source
        self.target = target
        super().__init__(f"reducible: no path {source + 1}→{target + 1}")


class DegenerateSpectrumError(TropicalError):
    pass


class NotMinimizerError(TropicalError):
    pass


class BadAlphaError(TropicalError):
    pass


class NotArrowError(TropicalError):
    pass


class HubMismatchError(TropicalError):
    """Per-coordinate blend inputs disagree in the first coordinate."""


class MissingCapsError(TropicalError):
    pass


class NoFiniteCycleError(TropicalError):
    pass


class TooLargeError(TropicalError):
    pass


class EmptyFeasibleGridError(TropicalError):
    pass


class ConsistencyError(AssertionError):
    """Two independent computations of the same quantity disagree."""
