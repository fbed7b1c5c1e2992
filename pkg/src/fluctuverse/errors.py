"""Exception hierarchy for the verification engine.

Everything raised by this package derives from FluctuverseError, so callers
can catch one type at the CLI boundary and map it to exit code 2.
"""

from __future__ import annotations


class FluctuverseError(Exception):
    """Base class for every error raised by this package."""


class DimensionMismatchError(FluctuverseError):
    """Two dimensions that were required to agree do not.

    Carries both dimension vectors so diagnostics can render them.
    """

    def __init__(self, left, right, context: str = ""):
        self.left = left
        self.right = right
        where = f" in {context}" if context else ""
        super().__init__(f"dimension mismatch{where}: {left} vs {right}")


class QuantityOverflowError(FluctuverseError, OverflowError):
    """An arithmetic result left the finite double range (inf or NaN)."""


class DivisionByZeroError(FluctuverseError, ZeroDivisionError):
    """Division by a zero-valued quantity."""


class DomainError(FluctuverseError, ValueError):
    """Operand outside the mathematical domain of the operation."""


class UnknownIdentifierError(FluctuverseError):
    """An identifier could not be resolved against the constants registry."""

    def __init__(self, name: str):
        self.name = name
        super().__init__(f"unknown identifier {name!r}")


class LexError(FluctuverseError):
    """Unlexable input character, with its position."""

    def __init__(self, message: str, line: int, column: int):
        self.line = line
        self.column = column
        super().__init__(f"{message} (line {line}, column {column})")


class ParseError(FluctuverseError):
    """Malformed expression, relation file or constants file."""


class DuplicateIdError(ParseError):
    """Two relation sections in one corpus share an id."""


class SealedRegistryError(FluctuverseError):
    """Attempted mutation of a registry after seal()."""


class IncompleteRegistryError(FluctuverseError, ValueError):
    """A registry was sealed without the required constant names."""


class NegativeTimeError(FluctuverseError, ValueError):
    """Evolution asked for a non-positive or negative time."""


class InvalidStepsError(FluctuverseError, ValueError):
    """Evolution asked for fewer than two integration steps."""


class EmptySeriesError(FluctuverseError, ValueError):
    """An epoch-series check received no states."""


class UnsupportedDimensionError(FluctuverseError, ValueError):
    """Spatial dimension count outside {1, 2, 3}."""


class InsufficientSamplesError(FluctuverseError, ValueError):
    """A spectrum classification needs at least three (nu, T) samples."""
