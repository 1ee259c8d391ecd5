"""Error types shared across the package."""


class DomainError(ValueError):
    """Input outside an operation's mathematical domain (bad index, wrong d, off-torus point)."""


class MarginError(ValueError):
    """Window too small for the requested check; retry with a larger window."""


class DegeneracyError(RuntimeError):
    """Joint diagonalization hit a (near-)degenerate spectrum; re-run with another seed."""


class NotToeplitzError(ValueError):
    """Entry oracle is inconsistent with every Toeplitz matrix within the degree bound."""
