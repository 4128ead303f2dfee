"""Exception hierarchy shared by every module of the package."""


class LSFError(Exception):
    """Base class; ``code`` is the machine-greppable tag printed by the CLI."""

    code = "LSF_ERROR"


class DomainError(LSFError, ValueError):
    code = "DOMAIN_ERROR"


class ConvergenceError(LSFError, RuntimeError):
    code = "CONVERGENCE_ERROR"


class SingularMatrixError(LSFError, ArithmeticError):
    code = "SINGULAR_MATRIX"

    def __init__(self, message, pivot_index=None):
        super().__init__(message)
        self.pivot_index = pivot_index


class CapabilityError(LSFError, TypeError):
    code = "CAPABILITY_ERROR"


class FlatTraceError(DomainError):
    """The trace has no interior minimum inside the search window."""

    code = "FLAT_TRACE"
