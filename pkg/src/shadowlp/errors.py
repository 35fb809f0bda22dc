"""Exception hierarchy shared by the solver, census and CLI."""


class ShadowLPError(Exception):
    """Base class for every error raised by this package."""


class SingularSystem(ShadowLPError):
    pass


class TooLarge(ShadowLPError):
    """Raised when an exhaustive enumeration would exceed the size guard."""


class ParseError(ShadowLPError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DimensionMismatch(ShadowLPError):
    pass


class DegeneratePivot(ShadowLPError):
    pass


class CycleGuard(ShadowLPError):
    pass


class NotOptimalStart(ShadowLPError):
    pass


class AllSingular(ShadowLPError):
    pass


class NonPositiveYPlus(ShadowLPError):
    pass


class ZetaSearchFailed(ShadowLPError):
    pass


class DegenerateCone(ShadowLPError):
    pass


class UnresolvedDegenerate(ShadowLPError):
    pass


class DomainError(ShadowLPError, ValueError):
    pass
