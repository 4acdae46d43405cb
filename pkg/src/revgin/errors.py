"""Exception hierarchy shared by all modules."""


class RevginError(Exception):
    """Base class for library errors."""


class DomainError(RevginError, ValueError):
    """An argument lies outside the domain of an operation."""


class DimensionError(DomainError):
    """Operands live in polynomial rings with different variable counts."""


class SingularMatrixError(DomainError):
    pass


class ShapeError(DomainError):
    pass


class NotArtinianError(DomainError):
    """The quotient ring is not finite dimensional."""


class InfeasibleHVectorError(DomainError):
    """No monomial ideal realises the requested Hilbert function."""


class UnstableGinError(RevginError):
    """Random coordinate changes produced different initial ideals.

    ``results`` holds every distinct initial ideal that was observed.
    """

    def __init__(self, results):
        self.results = list(results)
        super().__init__(
            f"gin trials disagree: {len(self.results)} distinct initial ideals"
        )
