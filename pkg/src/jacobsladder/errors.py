"""Exception types shared across the package.

Numeric failures are never silently degraded: anything that cannot meet its
contract raises one of these, and the CLI maps them to exit status 3.
"""


class LadderError(Exception):
    """Base class for all package errors."""


class DomainError(LadderError, ValueError):
    """An argument violates an operation's stated precondition."""


class PrecisionError(LadderError):
    """The arbitrary-precision reference failed its internal agreement check."""


class ToleranceNotMetError(LadderError):
    """Quadrature could not certify the requested tolerance.

    Carries the achieved error estimate and the offending panel.
    """

    def __init__(self, msg, achieved=None, panel=None):
        super().__init__(msg)
        self.achieved = achieved
        self.panel = panel


class NoRootError(LadderError):
    """Monotone inversion target lies outside the increasing regime."""


class BracketError(LadderError):
    """A root bracket is invalid or could not be established.

    Carries the scanned range when raised by a bracket search.
    """

    def __init__(self, msg, scanned=None):
        super().__init__(msg)
        self.scanned = scanned


class NotAttainedError(LadderError):
    """A chord-angle target is outside the range swept by the rotating chord."""

    def __init__(self, msg, swept=None):
        super().__init__(msg)
        self.swept = swept


class InflectionNotFoundError(LadderError):
    """No convex-to-concave switch detected at the working resolution."""

    def __init__(self, msg, profile=None):
        super().__init__(msg)
        self.profile = profile


class NoCrossingError(LadderError):
    """Curve/chord difference has no sign change at scan resolution."""

    def __init__(self, msg, profile=None):
        super().__init__(msg)
        self.profile = profile


class TableFormatError(LadderError):
    """Base class for integral-table cache file problems."""


class VersionMismatchError(TableFormatError):
    """Cache file declares a format version this code does not read."""


class DigestMismatchError(TableFormatError):
    """Cache file was built under a different evaluation configuration."""


class CorruptTableError(TableFormatError):
    """Cache file fails structural or checksum validation."""
