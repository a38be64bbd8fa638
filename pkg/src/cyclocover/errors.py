"""Exception types shared across the package."""


class CycloCoverError(Exception):
    """Base class for all errors raised by this package."""


class InvalidCoverError(CycloCoverError, ValueError):
    """A parameter quadruple does not define a connected, unbranched-at-infinity cover."""


class DegreeTooSmall(InvalidCoverError):
    """Cover degree N must be at least 2."""


class NotConnected(InvalidCoverError):
    """gcd(N, a1, ..., a4) > 1, so the cover is disconnected."""


class SumNotDivisible(InvalidCoverError):
    """a1 + a2 + a3 + a4 is not divisible by N, so the cover branches at infinity."""


class DegreeMismatch(CycloCoverError, ValueError):
    """Two covers of different degree were compared."""


class VerificationFailure(CycloCoverError, AssertionError):
    """An origami failed one of the independent topological cross-checks.

    The first argument names the violated clause.
    """

    def __init__(self, clause, message):
        super().__init__(f"{clause}: {message}")
        self.clause = clause
        self.message = message


class ClassificationMismatch(CycloCoverError, AssertionError):
    """The symmetry-case classification disagrees with the computed group index."""
