"""Exception types shared across the toolkit."""


class RamseyCertError(Exception):
    """Base class for every error raised by this package."""


class PreconditionError(RamseyCertError, ValueError):
    """An input violates the documented precondition of an operation."""


class InconsistentCongruences(RamseyCertError, ValueError):
    """A system of congruences has no common solution."""

    def __init__(self, first, second):
        self.first = first
        self.second = second
        super().__init__(
            f"inconsistent congruences: x = {first[0]} mod {first[1]} "
            f"conflicts with x = {second[0]} mod {second[1]}"
        )


class BudgetExceeded(RamseyCertError):
    """A configurable work budget ran out before the computation finished."""


class HypothesisUnsatisfied(RamseyCertError):
    """An existential hypothesis of a construction recipe does not hold."""


class BelowThreshold(RamseyCertError):
    """An asymptotic guarantee does not yet apply at the given size."""
