"""Exception types shared across the package.

The CLI maps these onto exit codes: ValidationError -> 2 (bad input),
NumericalError -> 1 (the computation itself could not proceed).
"""


class ValidationError(ValueError):
    """An input violates a documented precondition."""


class NumericalError(RuntimeError):
    """A numerically degenerate situation prevents a result."""
