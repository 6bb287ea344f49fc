"""Exceptions for selfdeg"""

from typing import TYPE_CHECKING, List

if TYPE_CHECKING:
    from selfdeg.types.dsl_types import Diagnostic
    from selfdeg.types.manifold_types import Violation


class SelfDegreeError(Exception):
    """Base class for every error raised by selfdeg"""

    exit_code = 3

    def __init__(self, message: str):
        """Initializes the exception"""
        super().__init__(message)
        self.message = message


class InvalidInputError(SelfDegreeError, ValueError):
    """Raised when an operation receives arguments outside its domain"""

    exit_code = 1


class ParseError(InvalidInputError):
    """Raised when a manifold description cannot be parsed or validated"""

    def __init__(self, message: str, diagnostics: "List[Diagnostic]"):
        """Initializes the exception"""
        super().__init__(message)
        self.diagnostics = diagnostics


class ManifoldValidationError(InvalidInputError):
    """Raised when a manifold descriptor violates its defining constraints"""

    def __init__(self, violations: "List[Violation]"):
        """Initializes the exception"""
        super().__init__(
            "; ".join(f"{v.path or '<root>'}: {v.message}" for v in violations)
        )
        self.violations = violations


class UnsupportedFormError(InvalidInputError):
    """Raised when a binary quadratic form has a discriminant the form machinery does not handle"""


class UnsupportedClassError(SelfDegreeError):
    """Raised when a degree set cannot answer the request, e.g. enumerating the trivial band"""

    exit_code = 2


class InvariantViolationError(SelfDegreeError, AssertionError):
    """Raised when an internal consistency check fails"""

    exit_code = 3
