"""Exceptions raised by fiblucas_matrix."""


class FibLucasError(Exception):
    """Base class for all errors raised by this package."""


class InvalidParameterError(FibLucasError, ValueError):
    """A sequence or family parameter is out of its domain (e.g. k <= 0)."""


class ConsistencyError(FibLucasError, ArithmeticError):
    """A closed form hit a non-exact division or a non-integer coefficient.

    This never describes a valid result: it means a formula was transcribed wrongly.
    """


class SizeLimitError(FibLucasError, ValueError):
    """Matrix order exceeds what a factorial-cost routine accepts."""


class SingularMatrixError(FibLucasError, ZeroDivisionError):
    """Matrix has no inverse."""


class OeisError(FibLucasError):
    """Base class for OEIS lookup errors."""


class AccessionError(OeisError, ValueError):
    """Accession does not match the pattern A followed by 6 digits."""


class OeisOfflineError(OeisError):
    """Network access is disabled and the cache has no copy of the b-file."""


class OeisNotFoundError(OeisError):
    """OEIS has no b-file for this accession."""


class BFileParseError(OeisError):
    """Malformed b-file line."""

    def __init__(self, source, line_number, line, reason="cannot parse"):
        self.source = source
        self.line_number = line_number
        self.line = line
        super().__init__(f"{source}, line {line_number}: {reason} {line!r}")
