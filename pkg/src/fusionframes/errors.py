"""Exception types raised by fusionframes."""


class FusionFrameError(Exception):
    """Base class for all package errors."""


class ValidationError(FusionFrameError, ValueError):
    """An input does not satisfy its structural contract.

    Examples: a non-Hermitian matrix handed to ``eigh``, a basis whose columns
    are not orthonormal, mismatched dimensions.
    """


class PreconditionError(FusionFrameError, ValueError):
    """Inputs are well formed but an operation's hypotheses do not hold
    (e.g. a (dims, weights) pair that is not normalized)."""


class BudgetExceededError(FusionFrameError, RuntimeError):
    """A combinatorial enumeration would exceed its configured budget."""

    def __init__(self, msg, required=None, budget=None):
        super().__init__(msg)
        self.required = required
        self.budget = budget
