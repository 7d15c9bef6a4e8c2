"""Exception hierarchy shared by the library and the CLI."""


class CutDimError(Exception):
    """Base class for all library errors."""


class InvalidEdgeError(CutDimError, ValueError):
    pass


class InvalidShoreError(CutDimError, ValueError):
    pass


class InvalidParameterError(CutDimError, ValueError):
    pass


class DimensionMismatchError(CutDimError, ValueError):
    pass


class CapExceededError(CutDimError):
    """Raised when exhaustive cut enumeration would exceed the vertex cap."""


class MalformedInputError(CutDimError, ValueError):
    """Input files that fail to parse or violate their schema."""


class PreconditionError(CutDimError, ValueError):
    """An operation was called on an input outside its contract."""


class NotLaminarError(PreconditionError):
    pass


class InvariantViolation(CutDimError, AssertionError):
    """A structural law that should always hold was observed to fail.

    Seeing this means either a bug or a counterexample; it is never expected.
    """
