"""Exception types shared across the package."""


class ResourceCapError(RuntimeError):
    """Raised when an operation would exceed a configured size cap."""


class DivergenceError(RuntimeError):
    """Raised when an iterative cooling loop fails to converge.

    Carries enough state to diagnose where the iteration stalled.
    """

    def __init__(self, message: str, *, round_index: int | None = None,
                 subspace: int | None = None, passes: int | None = None):
        super().__init__(message)
        self.round_index = round_index
        self.subspace = subspace
        self.passes = passes
