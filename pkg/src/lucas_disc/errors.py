"""Exception types shared by the computational modules."""


class LucasDiscError(Exception):
    """Base class for every error raised by this package."""


class CapExceeded(LucasDiscError):
    """A configured size or cost cap would be exceeded."""


class NotCovered(LucasDiscError):
    """k lies in a residue class where no closed characterization is known."""


class FactorizationIncomplete(LucasDiscError):
    """An integer could not be fully factored under the trial-division cap."""


# divisors() reports the same condition under this name.
IncompleteFactorization = FactorizationIncomplete


class GuardExceeded(LucasDiscError):
    """A p-adic valuation reached the precision guard."""


class NotOddPrime(LucasDiscError, ValueError):
    pass


class PreconditionViolated(LucasDiscError, ValueError):
    pass


class CountMismatch(LucasDiscError):
    """A congruence-class count disagrees with its closed formula."""


class SearchCapExceeded(LucasDiscError):
    pass
