"""Exception hierarchy shared across the package.

All exceptions raised by this package derive from :class:`GrowthcertError`,
so callers can catch one base type at an API boundary.  Parsing errors carry
source positions; the elimination error carries the failing stage.
"""

from __future__ import annotations

__all__ = [
    "GrowthcertError",
    "DimensionMismatch",
    "NonHermitianInput",
    "NotPositiveDefinite",
    "SingularLeadingBlock",
    "ZeroPivot",
    "DomainError",
    "KappaExceeded",
    "NotInClass",
    "AngleOutOfRange",
    "ConvergenceError",
    "ParseError",
    "RaggedRowError",
    "ConfigError",
]


class GrowthcertError(Exception):
    """Base class for every error raised by this package."""


class DimensionMismatch(GrowthcertError):
    """Operands have incompatible or invalid shapes."""


class NonHermitianInput(GrowthcertError):
    """A matrix required to be Hermitian/symmetric fails the symmetry test."""


class NotPositiveDefinite(GrowthcertError):
    """A matrix required to be positive definite has a non-positive direction."""


class SingularLeadingBlock(GrowthcertError):
    """A leading principal block is numerically singular."""


class ZeroPivot(GrowthcertError):
    """Pivotless elimination met a pivot below the pivot threshold.

    Attributes
    ----------
    stage : int
        One-based elimination stage whose pivot was too small.
    """

    def __init__(self, stage: int, message: str | None = None):
        self.stage = int(stage)
        if message is None:
            message = f"pivot modulus below threshold at elimination stage {self.stage}"
        super().__init__(message)


class DomainError(GrowthcertError):
    """A scalar argument lies outside the domain of the operation."""


class KappaExceeded(GrowthcertError):
    """The measured condition number exceeds the caller-supplied cap."""


class NotInClass(GrowthcertError):
    """The input does not belong to the matrix class the operation requires."""


class AngleOutOfRange(GrowthcertError):
    """A sector angle is outside the range where the bound is defined."""


class ConvergenceError(GrowthcertError):
    """An iterative kernel failed to converge within its sweep budget."""


class ParseError(GrowthcertError):
    """A matrix file or config document is malformed.

    Attributes
    ----------
    line, column : int or None
        One-based position of the offending token, when known.
    """

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", column {column})" if column is not None else ")")
        super().__init__(message + where)


class RaggedRowError(ParseError, DimensionMismatch):
    """A data row of a matrix file has the wrong number of entries.

    Inherits from both :class:`ParseError` (it is a file-format problem with a
    source position) and :class:`DimensionMismatch` (the shape is wrong).
    """


class ConfigError(GrowthcertError):
    """A campaign configuration is invalid or contains unknown keys."""
