"""Exception hierarchy shared across the package."""


class SiltError(Exception):
    """Base class for all siltcheck errors."""


class CatalogError(SiltError):
    """A ring or homomorphism outside the supported catalog."""


class RingMismatchError(SiltError):
    """Operands live over semantically different rings."""


class DimensionMismatchError(SiltError):
    """Matrix/vector shapes violate an operation's contract."""


class InfiniteEnumerationError(SiltError):
    """Explicit enumeration requested over an infinite lattice."""


class PreconditionError(SiltError):
    """A declared operation precondition does not hold."""


class ClassificationError(SiltError):
    """Structural homomorphism flags disagree with the empirical battery."""


class InputError(SiltError):
    """Malformed input document; message carries a field diagnostic."""
