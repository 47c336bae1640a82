"""Exception hierarchy shared by every curvex module."""

from __future__ import annotations


class CurvexError(Exception):
    """Base class for domain errors (CLI exit code 1)."""


class Disconnected(CurvexError):
    pass


class InvalidParameter(CurvexError, ValueError):
    pass


class VertexOutOfRange(CurvexError, IndexError):
    pass


class MalformedGraph6(CurvexError, ValueError):
    def __init__(self, message: str, offset: int, line: int | None = None):
        self.offset = offset
        self.line = line
        where = f"byte {offset}" if line is None else f"line {line}, byte {offset}"
        super().__init__(f"{message} ({where})")


class MapInvalid(CurvexError, ValueError):
    pass


class DimensionMismatch(CurvexError, ValueError):
    pass


class NotSymmetric(CurvexError, ValueError):
    pass


class DistanceExceptional(CurvexError):
    pass


class EigenFailure(CurvexError):
    pass


class CertificateViolation(CurvexError):
    pass


class NonPositive(CurvexError, ValueError):
    pass


class PlacementLengthMismatch(CurvexError, ValueError):
    pass


class OrderTooLarge(CurvexError, ValueError):
    pass
