"""Exception types shared across the package."""


class GraphError(ValueError):
    """An edge list, a parameter set, or a constructed graph violates the contract.

    Carries the offending 1-based line number when the problem comes from an
    edge-list document.
    """

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class NumericalError(RuntimeError):
    """A linear solve or eigensolver failed, or a numerical invariant broke."""


class AutomorphismCapExceeded(RuntimeError):
    """The automorphism group is larger than the configured cap."""

    def __init__(self, cap: int):
        super().__init__(
            f"automorphism group exceeds the cap of {cap}; raise the cap or "
            "avoid queries that need the full group"
        )
        self.cap = cap
