"""Exception hierarchy shared by the computational modules.

The CLI maps these onto exit codes: input problems -> 2,
mathematical preconditions -> 3, invariant breaches -> 4.
"""


class PreconditionError(ValueError):
    """The input is well formed but outside the mathematical regime handled."""


class NotWeightedHomogeneous(PreconditionError):
    pass


class NotIsolated(PreconditionError):
    pass


class NewtonPreconditionError(PreconditionError):
    """Non-convenient, degenerate, or too large for the Newton machinery."""


class InvariantBreach(AssertionError):
    """A proved identity failed on computed data: an implementation bug."""
