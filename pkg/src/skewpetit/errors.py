"""Exception types shared across the package."""


class PreconditionError(ValueError):
    """A hypothesis of the requested operation does not hold (refused, not an error in the input)."""


class GuardExceeded(PreconditionError):
    """An exhaustive search would exceed its enumeration budget."""


class InfiniteDimensionalError(PreconditionError):
    """The operation needs a finite coefficient field."""
