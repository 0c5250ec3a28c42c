"""Exception types shared across the workbench."""


class StarKMSError(Exception):
    """Base class for all workbench errors."""


class ContextMismatchError(StarKMSError):
    """Operands live on different backends or phase-space contexts."""


class BackendDomainError(StarKMSError):
    """Input is outside the domain of the requested operation
    (e.g. integrating a non-integrable function)."""


class TruncationBoundError(StarKMSError):
    """A bidifferential order beyond the configured truncation was requested."""


class PreconditionError(StarKMSError):
    """A stated precondition fails (non-closed one-form, nonzero mean, ...)."""


class UnsupportedHamiltonianError(StarKMSError):
    """The Hamiltonian is outside the class handled by the exact machinery."""


class UnsupportedFlowError(StarKMSError):
    """No exact flow is available for the requested evolution."""
