"""Exception types raised across the toolchain."""

from __future__ import annotations


class DepthscanError(Exception):
    """Base class for all tool-specific errors."""


class SourceError(DepthscanError):
    """An error anchored to a position in MiniSol source text."""

    def __init__(self, message: str, line: int = 0, col: int = 0):
        super().__init__(f"{line}:{col}: {message}" if line else message)
        self.message = message
        self.line = line
        self.col = col


class ParseError(SourceError):
    """Malformed syntax; carries the expected token kinds."""

    def __init__(self, message: str, line: int = 0, col: int = 0, expected: tuple[str, ...] = ()):
        super().__init__(message, line, col)
        self.expected = expected


class ResolutionError(SourceError):
    """Unknown identifier or duplicate declaration."""


class TypeCheckError(SourceError):
    """Operand or statement type mismatch."""


class LoweringError(DepthscanError):
    """Source construct outside the lowerable subset."""


class UnknownFunction(DepthscanError):
    """Lookup of a function name that is not a public function."""


class MalformedConstraint(DepthscanError):
    """Constraint with a free local, width mismatch, or wrong sort."""
