"""
Base Exception Class

This module contains ONLY the base exception class that all other exceptions inherit from.
All specialized exceptions are in their respective themed modules.

Author: System Architect
Date: 2026-02-11
"""

from typing import Any


class KroneckerError(Exception):
    """
    Base exception for all coefficient and Deligne-category errors.

    All custom exceptions inherit from this class to enable:
    - Consistent error handling at the CLI boundary
    - Operation correlation in structured logs
    - Machine-readable error documents

    Attributes:
        message: Error message
        operation: Name of the library operation that failed (if known)
        details: Additional error details (dict)

    Example:
        raise BoundViolationError(
            "tilde is undefined below |lam| + lam_1",
            operation="tilde",
            details={"lam": "2,1", "n": 4, "minimum": 5},
        )
    """

    def __init__(
        self, message: str, operation: str | None = None, details: dict[str, Any] | None = None
    ):
        self.message = message
        self.operation = operation
        self.details = (details or {}).copy()
        super().__init__(self.message)

    def to_dict(self) -> dict[str, Any]:
        """
        Convert exception to dictionary for logging and CLI error documents.

        Returns:
            Dict with error, message, operation and details
        """
        return {
            "error": self.__class__.__name__,
            "message": self.message,
            "operation": self.operation,
            "details": self.details,
        }

    def with_suggestion(self, suggestion: str) -> "KroneckerError":
        """Add a suggestion to help users fix the error (chainable)."""
        self.details["suggestion"] = suggestion
        return self

    def with_context(self, **context: Any) -> "KroneckerError":
        """Add additional context to the error details (chainable)."""
        self.details.update(context)
        return self

    def __repr__(self) -> str:
        details_str = f", details={self.details}" if self.details else ""
        operation_str = f", operation='{self.operation}'" if self.operation else ""
        return f"{self.__class__.__name__}(message='{self.message}'{operation_str}{details_str})"

    @classmethod
    def from_exception(
        cls,
        exc: Exception,
        message: str | None = None,
        operation: str | None = None,
        **details: Any,
    ) -> "KroneckerError":
        """
        Create an error of this class from another exception.

        Useful for wrapping OS or decoding errors with path context.

        Example:
            >>> try:
            ...     path.read_bytes()
            ... except OSError as e:
            ...     raise CacheIOError.from_exception(e, operation="cache_get", path=str(path))
        """
        error_message = message or str(exc)
        error_details = {
            "original_error": exc.__class__.__name__,
            "original_message": str(exc),
            **details,
        }
        return cls(error_message, operation=operation, details=error_details)


# Configuration exception (kept here as it's fundamental)
class ConfigurationError(KroneckerError):
    """Raised when configuration is invalid or missing."""
    pass
