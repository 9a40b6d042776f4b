"""
Unit tests for the exception hierarchy.
"""

from fractions import Fraction

import pytest

from collatzlab.core.exceptions import (
    CacheError,
    CollatzLabException,
    DegenerateDenominator,
    NotDivisible,
    NotMonotone,
    NotOdd,
    NotPositive,
    RepresentationError,
    StepBudgetExceeded,
    VerificationFailure,
)
from collatzlab.core.repcore import cycle_solve


class TestCollatzLabException:
    """Test the base exception."""

    def test_message_only(self):
        """Test a plain message."""
        assert str(CollatzLabException("boom")) == "boom"

    def test_details_and_cause(self):
        """Test that details and cause are appended."""
        cause = OSError("disk full")
        error = CacheError("cannot write", details={"shard": "0-99"}, cause=cause)
        assert str(error) == "cannot write (Details: shard=0-99) (Caused by: disk full)"
        assert error.cause is cause

    @pytest.mark.parametrize("cls", [NotMonotone, NotPositive, NotDivisible, NotOdd])
    def test_representation_errors(self, cls):
        """Test the representation error family."""
        assert issubclass(cls, RepresentationError)
        assert issubclass(cls, CollatzLabException)


class TestStepBudgetExceeded:
    """Test the budget overrun report."""

    def test_attributes(self):
        """Test that the run state is kept."""
        error = StepBudgetExceeded(27, 10, 214)
        assert (error.start, error.max_steps, error.last_term) == (27, 10, 214)
        assert error.details == {"max_steps": 10, "last_term_bits": 8}
        assert "27" in str(error)


class TestOtherErrors:
    """Test errors that carry extra state."""

    def test_verification_failure(self):
        """Test the failures list."""
        assert VerificationFailure("bad").failures == []
        assert VerificationFailure("bad", failures=["x"]).failures == ["x"]

    def test_degenerate_denominator(self):
        """Test that cycle_solve reports the offending ratio."""
        with pytest.raises(DegenerateDenominator) as exc_info:
            cycle_solve((0, 1))
        assert exc_info.value.q_star == Fraction(-1)
        assert exc_info.value.details["q_star"] == Fraction(-1)
