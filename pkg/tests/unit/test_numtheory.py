"""
Unit tests for the exact integer helpers.
"""

import math

import pytest
from sympy.ntheory import discrete_log

from collatzlab.core.exceptions import InputValidationError, NoSolution
from collatzlab.utils.numtheory import (
    assert_two_is_primitive_root,
    ceil_log2,
    dlog2_mod_power_of_three,
    ln_big,
    two_order_mod_power_of_three,
    v2,
)


class TestValuation:
    """Test the 2-adic valuation."""

    @pytest.mark.parametrize("n, expected", [(1, 0), (2, 1), (12, 2), (1 << 200, 200), (-8, 3)])
    def test_values(self, n: int, expected: int):
        """Test known valuations."""
        assert v2(n) == expected

    def test_zero_rejected(self):
        """Test that 0 has no valuation."""
        with pytest.raises(InputValidationError):
            v2(0)


class TestCeilLog2:
    """Test the exact ceiling of log2."""

    @pytest.mark.parametrize("n, expected", [(1, 0), (2, 1), (3, 2), (4, 2), (5, 3), (1024, 10)])
    def test_small_values(self, n: int, expected: int):
        """Test values around powers of two."""
        assert ceil_log2(n) == expected

    def test_big_power_boundary(self):
        """Test exactness where floats would round."""
        big = 1 << 500
        assert ceil_log2(big) == 500
        assert ceil_log2(big + 1) == 501


class TestLnBig:
    """Test the big-integer natural log."""

    def test_matches_math_log(self):
        """Test agreement with math.log on small values."""
        for n in (1, 2, 3, 993, 10**15):
            assert ln_big(n) == pytest.approx(math.log(n), rel=1e-15)

    def test_huge_value(self):
        """Test a value far beyond float range."""
        n = 3**5000
        assert ln_big(n) == pytest.approx(5000 * math.log(3), rel=1e-12)


class TestDiscreteLog:
    """Test the discrete log base 2 modulo powers of three."""

    def test_primitive_root(self):
        """Test that 2 has full order modulo 3^n."""
        assert_two_is_primitive_root(8)
        assert two_order_mod_power_of_three(3) == 18

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_against_direct_scan(self, n: int):
        """Test every unit against exhaustive search."""
        modulus = 3**n
        logs = {pow(2, x, modulus): x for x in range(2 * 3 ** (n - 1))}
        for a, x in logs.items():
            assert dlog2_mod_power_of_three(a, n) == x

    @pytest.mark.parametrize("a, n", [(19, 3), (37, 4), (277, 5), (123456790, 12)])
    def test_against_sympy(self, a: int, n: int):
        """Test agreement with sympy's discrete_log."""
        modulus = 3**n
        assert dlog2_mod_power_of_three(a, n) == discrete_log(modulus, a % modulus, 2)

    def test_non_unit(self):
        """Test that multiples of 3 have no log."""
        with pytest.raises(NoSolution):
            dlog2_mod_power_of_three(9, 3)

    def test_bad_exponent(self):
        """Test that the modulus exponent must be positive."""
        with pytest.raises(InputValidationError):
            dlog2_mod_power_of_three(2, 0)
