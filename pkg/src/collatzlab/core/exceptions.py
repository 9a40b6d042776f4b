"""
Exception classes for collatzlab.

This module defines a hierarchy of exceptions that carry enough context
(starting value, exponents, budgets) to report a failed computation without
re-running it.
"""

from fractions import Fraction
from typing import Any, Dict, List, Optional


class CollatzLabException(Exception):
    """Base exception for all collatzlab errors."""

    def __init__(
        self,
        message: str,
        details: Optional[Dict[str, Any]] = None,
        cause: Optional[Exception] = None,
    ) -> None:
        super().__init__(message)
        self.message = message
        self.details = details or {}
        self.cause = cause

    def __str__(self) -> str:
        result = self.message
        if self.details:
            details_str = ", ".join(f"{k}={v}" for k, v in self.details.items())
            result += f" (Details: {details_str})"
        if self.cause:
            result += f" (Caused by: {self.cause})"
        return result


class ConfigurationError(CollatzLabException):
    """Raised when there's an error in application configuration."""

    pass


class InputValidationError(CollatzLabException):
    """Raised when an operation receives an argument outside its domain."""

    pass


class StepBudgetExceeded(CollatzLabException):
    """Raised when a trajectory does not reach 1 within the step budget.

    This is the counterexample signal for divergence or a non-trivial cycle,
    so it keeps the state needed to report the run.
    """

    def __init__(
        self,
        start: int,
        max_steps: int,
        last_term: int,
        **kwargs: Any,
    ) -> None:
        super().__init__(
            f"Trajectory of {start} did not reach 1 within {max_steps} steps",
            details={"max_steps": max_steps, "last_term_bits": last_term.bit_length()},
            **kwargs,
        )
        self.start = start
        self.max_steps = max_steps
        self.last_term = last_term


class EvenStart(CollatzLabException):
    """Raised when an operation that needs an odd start gets an even one."""

    pass


class RepresentationError(CollatzLabException):
    """Base class for exponent vectors that do not describe a natural number."""

    pass


class NotMonotone(RepresentationError):
    """Raised when exponents are not strictly increasing."""

    pass


class NotPositive(RepresentationError):
    """Raised when a representation's numerator is not positive."""

    pass


class NotDivisible(RepresentationError):
    """Raised when a representation's numerator is not divisible by its power of 3."""

    pass


class NotOdd(RepresentationError):
    """Raised when an even/odd family member evaluates to an even number."""

    pass


class DegenerateDenominator(CollatzLabException):
    """Raised when a cycle profile has 2^a <= 3^(k+1)."""

    def __init__(self, message: str, q_star: Optional[Fraction] = None, **kwargs: Any) -> None:
        super().__init__(message, **kwargs)
        self.q_star = q_star


class NoSolution(CollatzLabException):
    """Raised when a discrete logarithm has no solution."""

    pass


class DomainViolation(CollatzLabException):
    """Raised when a solved constant falls outside its documented residue classes."""

    pass


class ResourceCap(CollatzLabException):
    """Raised when a request exceeds a configured enumeration cap."""

    pass


class VerificationFailure(CollatzLabException):
    """Raised when a verification suite or an asserted trend fails."""

    def __init__(self, message: str, failures: Optional[List[str]] = None, **kwargs: Any) -> None:
        super().__init__(message, **kwargs)
        self.failures = failures or []


class CacheError(CollatzLabException):
    """Raised when the record cache cannot be read or written."""

    pass
