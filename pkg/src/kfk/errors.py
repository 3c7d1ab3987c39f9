"""Exception types shared across the package.

Every domain error derives from :class:`DomainError` so callers (and the CLI)
can catch the whole family at once and still report the precise class name.
"""


class DomainError(ValueError):
    """Input outside the domain of an operation."""


class InvalidInput(DomainError):
    pass


class DegenerateSurgery(InvalidInput):
    """Surgery data with ``m p = q w^2``; forces ``p = w = 1``, a core of the solid torus."""


class NotAKnot(DomainError):
    """Braid permutation is not a single n-cycle."""


class TrivialRelator(DomainError):
    pass


class NotCyclicallyReduced(DomainError):
    pass


class NonzeroTotal(DomainError):
    """The homomorphism does not vanish on the relator."""


class NonzeroWeightRequired(DomainError):
    """Brown's criterion needs both generators to have nonzero weight."""


class MeridianSlope(DomainError):
    pass


class WindingNotCoprime(DomainError):
    pass


class ZeroWeight(DomainError):
    pass


class FalsificationError(AssertionError):
    """A guaranteed property failed on admissible input.

    ``certificate`` carries whatever object documents the failure.
    """

    def __init__(self, message, certificate=None):
        super().__init__(message)
        self.certificate = certificate
