"""Exception types shared across the package."""


class TiltlabError(Exception):
    """Base class for all package-specific errors."""


class QuiverMismatch(TiltlabError):
    """Operands live over different quivers or different fields."""


class NotInvariant(TiltlabError):
    """Vertex-wise subspaces are not stable under the arrow maps."""


class NonProjective(TiltlabError):
    """A morphism between projectives was expected."""


class NonSplitField(TiltlabError):
    """Decomposition ran into an endomorphism algebra that does not split
    over the ground field (only possible over the rationals here)."""


class NoExtension(TiltlabError):
    """Requested a non-split extension where Ext^1 vanishes."""


class SearchBudgetExceeded(TiltlabError):
    """Submodule enumeration would exceed the configured budget."""


class UnsupportedFamily(TiltlabError):
    """Unknown quiver family, or the family lacks the requested structure."""


class NotBound(TiltlabError):
    """Module fails the bound-module conditions (nonzero, finitely
    presented, projective dimension one, no homomorphisms to the ring)."""


class NotPrime(TiltlabError):
    """An integer that was required to be prime is not."""


class NotContained(TiltlabError):
    """Ideal containment J <= I fails."""


class NotDivisible(TiltlabError):
    """Division by a prime is impossible in the target module."""

    def __init__(self, prime: int, message: str | None = None):
        self.prime = prime
        super().__init__(message or f"target is not divisible by {prime}")


class SameGenerator(TiltlabError):
    """Two distinct generators were required."""


class ParseError(TiltlabError):
    """Malformed input text; carries the 1-based line number."""

    def __init__(self, line: int, reason: str):
        self.line = line
        self.reason = reason
        super().__init__(f"line {line}: {reason}")
