"""Exception types shared across the package."""


class ExponentTooLarge(ValueError):
    """Polynomial power exceeds the configured exponent bound."""


class NotDivisible(ArithmeticError):
    """Exact division failed.

    For coefficient-wise division, ``index`` is the power of the first
    coefficient that is not divisible; for polynomial division it is None.
    """

    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class InvalidK(ValueError):
    """Family index k must be an odd integer >= 3."""


class IndexOutOfRange(ValueError):
    """Sequence index outside [1, limit]."""


class BridgeBroken(RuntimeError):
    """A Pell bridge identity failed; signals an implementation bug."""


class CrossCheckFailed(RuntimeError):
    """Two independent constructions of the same object disagree."""


class DegenerateInput(ValueError):
    """Input violates a hypothesis (constant x, or x^3 = y^2)."""


class DegenerateWitness(ValueError):
    """Specialization produced d = 0 or x < 1."""


class CorpusCorrupted(RuntimeError):
    """An embedded corpus entry failed re-verification."""

    def __init__(self, entry, message, index=None):
        super().__init__(f"corpus entry {entry!r}: {message}")
        self.entry = entry
        self.index = index
