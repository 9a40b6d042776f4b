"""
collatzlab - a computational laboratory for 3x+1 trajectories.

This package provides:
- Exact big-integer trajectories under the Collatz map and its accelerated form
- The representation algebra of inverse iterates of 1 (exponent vectors,
  3-smooth special representations, cycle profiles, admissible sequences)
- Even/odd parameter families, their primitive seeds and level counts
- Completeness, ones-ratio, stopping-time and residual statistics with record scans
"""

__version__ = "0.3.0"
__author__ = "Your Name"
__email__ = "your.email@example.com"

from .core.exceptions import (
    CollatzLabException,
    ConfigurationError,
    DegenerateDenominator,
    DomainViolation,
    EvenStart,
    InputValidationError,
    NoSolution,
    NotDivisible,
    NotMonotone,
    NotOdd,
    NotPositive,
    RepresentationError,
    ResourceCap,
    StepBudgetExceeded,
    VerificationFailure,
)

__all__ = [
    "__version__",
    "__author__",
    "__email__",
    "CollatzLabException",
    "ConfigurationError",
    "DegenerateDenominator",
    "DomainViolation",
    "EvenStart",
    "InputValidationError",
    "NoSolution",
    "NotDivisible",
    "NotMonotone",
    "NotOdd",
    "NotPositive",
    "RepresentationError",
    "ResourceCap",
    "StepBudgetExceeded",
    "VerificationFailure",
]
