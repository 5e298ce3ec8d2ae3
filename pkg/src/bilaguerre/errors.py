"""Exception types shared across the package."""


class DomainError(ValueError):
    """Input outside the mathematical domain of an operation.

    Raised for a zero base under a negative exponent, non-finite floats,
    a Laurent residue where a genuine polynomial is required, and similar.
    The CLI maps it to exit status 3.
    """


class VariableMismatch(ValueError):
    """Operands carry different variable tags."""


class ConvergenceError(RuntimeError):
    """An iterative solver hit its iteration cap."""
