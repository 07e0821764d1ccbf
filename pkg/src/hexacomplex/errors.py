"""Exception types shared across the library."""

from __future__ import annotations


class HexaError(Exception):
    """Base class for all errors raised by this library."""


class VariantError(HexaError, ValueError):
    """Raised when polar and planar values are mixed in one operation."""


class ZeroDivisorError(HexaError, ArithmeticError):
    """Raised when inverting an element with a vanishing canonical component.

    ``component`` names the component that vanished ("v+", "v-", "pair1", ...).
    """

    def __init__(self, component: str, message: str | None = None):
        self.component = component
        super().__init__(message or f"zero divisor: canonical component {component} vanishes")


class DomainError(HexaError, ValueError):
    """Raised when an operand lies outside a function's domain.

    ``component`` names the canonical component violating the precondition,
    when that is the cause.
    """

    def __init__(self, message: str, component: str | None = None):
        self.component = component
        super().__init__(message)


class NonConvergenceError(HexaError, ArithmeticError):
    """Raised when an iterative solver fails to reach its tolerance."""

    def __init__(self, message: str, residual: float | None = None):
        self.residual = residual
        super().__init__(message)


class DegeneratePathError(HexaError, ValueError):
    """Raised when an integration path touches a forbidden set."""


class ParseError(HexaError, ValueError):
    """Syntax error in the expression language, with source position.

    ``line`` and ``column`` are 1-based; ``expected`` is the set of token
    descriptions that would have been acceptable at that point.
    """

    def __init__(self, message: str, line: int, column: int, expected: frozenset[str] = frozenset()):
        self.line = line
        self.column = column
        self.expected = expected
        super().__init__(f"{message} at line {line}, column {column}")
