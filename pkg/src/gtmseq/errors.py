"""Exception types shared across the package."""


class GtmseqError(Exception):
    """Base class for all library errors."""


class SpecParseError(GtmseqError):
    """A spec file could not be parsed; carries the offending line number."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class WindowExceededError(GtmseqError):
    """A finite-window kappa spec was queried beyond its window bound."""


class BudgetExceededError(GtmseqError):
    """A requested computation exceeds the configured memory budget."""


class PeriodicSpecError(GtmseqError):
    """Operation requires a non-periodic sequence but the spec is periodic
    (or could not be shown non-periodic)."""


class MTooSmallError(GtmseqError):
    """Stammering construction index m is below the legal minimum."""


class FactorizationError(GtmseqError):
    """Trial division up to the configured bound left a composite cofactor."""
