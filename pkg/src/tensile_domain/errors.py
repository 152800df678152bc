"""Exception hierarchy shared by all modules."""


class TensileDomainError(Exception):
    """Base class for library errors."""


class DegenerateMaterial(TensileDomainError, ValueError):
    """Moduli do not define an admissible material."""


class InvalidLoad(TensileDomainError, ValueError):
    """Electric load parameters are out of range."""


class InvalidState(TensileDomainError, ValueError):
    """Stretch state is not positive and finite."""


class MaterialEvaluationError(TensileDomainError, ArithmeticError):
    """A response function returned a non-finite value."""


class NotAvailable(TensileDomainError):
    """The quantity is not defined for this kind of material."""


class SolverError(TensileDomainError, RuntimeError):
    """A scalar solver failed to bracket or converge.

    ``diagnostics`` holds whatever the solver knew at failure time
    (bracket ends, function values, iteration count).
    """

    def __init__(self, message, **diagnostics):
        super().__init__(message)
        self.diagnostics = diagnostics


class UnboundedError(SolverError):
    """A supremum search ran into its cap without finding an interior maximum."""
