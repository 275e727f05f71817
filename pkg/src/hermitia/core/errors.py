"""Exception hierarchy shared by all hermitia modules."""


class HermitiaError(ValueError):
    """Base class for invalid input to a hermitia operation."""


class FieldError(HermitiaError):
    """Invalid imaginary quadratic field parameters, or mixed-field operands."""


class LatticeError(HermitiaError):
    """A Gram presentation that is not a valid integral Hermitian lattice."""


class FormError(HermitiaError):
    """A quadratic form violating an operation's precondition (e.g. degenerate input)."""


class DimensionMismatchError(HermitiaError):
    """Vectors, matrices or forms of incompatible sizes."""


class ParseError(HermitiaError):
    """Malformed lattice or polynomial text."""


class EscalationError(HermitiaError):
    """An escalation request that cannot be served (no truant, rank out of range)."""
