class FallkolorError(Exception):
    """Base class for errors raised by this package."""


class BudgetExceeded(FallkolorError):
    """An enumeration or search exceeded its configured budget."""


class NoDesignError(FallkolorError):
    """The requested design provably does not exist, or none was supplied."""


class UnlabeledGraphError(FallkolorError):
    """An operation needing Kneser subset labels got an unlabeled graph."""


class ConstructionError(FallkolorError):
    """A construction failed its post-verification.

    ``witness`` is the verifier's witness (a monochromatic edge or a
    non-colorful vertex with the color it misses).
    """

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class RecipeUnverified(ConstructionError):
    """The reconstructed star-extension recipe did not yield a fall coloring."""
