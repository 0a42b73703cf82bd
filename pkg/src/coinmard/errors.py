"""Exception hierarchy shared across the package.

The CLI maps these onto stable exit codes: DomainError -> 1,
VerificationError -> 2, ResourceCapError -> 3.
"""


class CoinmardError(Exception):
    """Base class for all package errors."""


class DomainError(CoinmardError, ValueError):
    """Input outside the operation's domain (bad v, bad coin pair, bad range)."""


class NotCoprimeError(DomainError):
    """Operation requires a coprime coin pair."""


class AllRepresentableError(DomainError):
    """Frobenius number requested for y=1, where every integer is representable."""


class ResourceCapError(CoinmardError):
    """A configured cap (oracle size, matrix order, exponent scan) was exceeded."""


class VerificationError(CoinmardError):
    """A mathematical invariant failed: a matrix is not Hadamard or a
    certificate does not satisfy its defining identity."""


class FormatError(DomainError):
    """A matrix file is malformed; carries the offending 1-based line number."""

    def __init__(self, message, line=None):
        super().__init__(message)
        self.line = line
