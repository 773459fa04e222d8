"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class GridError(ValueError):
    """A sample grid violates a structural requirement (tensor structure,
    uniform spacing, or agreement with a transform plan)."""


class ConvergenceError(RuntimeError):
    """An iterative routine failed to reach its tolerance within the
    permitted number of steps."""


class ResonanceError(ArithmeticError):
    """A Helmholtz solve hit a (near-)zero denominator at some discrete
    frequency tuple."""


class FieldFormatError(ValueError):
    """A serialized field could not be parsed."""
