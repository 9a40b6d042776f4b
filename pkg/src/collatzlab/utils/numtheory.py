"""
Exact integer helpers shared by the core modules.

Everything here works on arbitrary-precision ints. Floating point only
appears in ln_big, and only after the integer has been reduced to its
leading bits.
"""

import logging
import math
from functools import lru_cache
from typing import Dict

from sympy.ntheory import n_order
from sympy.ntheory.modular import crt

from ..core.exceptions import InputValidationError, NoSolution

logger = logging.getLogger(__name__)

LN2 = math.log(2)
LN3 = math.log(3)
INV_LN2 = 1 / LN2

_LN_MANTISSA_BITS = 128


def v2(n: int) -> int:
    """2-adic valuation of a nonzero integer."""
    if n == 0:
        raise InputValidationError("2-adic valuation of 0 is undefined")
    return (n & -n).bit_length() - 1


def ceil_log2(n: int) -> int:
    """Exact ceil(log2(n)) for n >= 1."""
    if n < 1:
        raise InputValidationError(f"ceil_log2 needs n >= 1, got {n}")
    return (n - 1).bit_length()


def ln_big(n: int) -> float:
    """Natural log of a positive integer of any size.

    Uses the exact bit length and a float of the top 128 bits.
    """
    if n < 1:
        raise InputValidationError(f"ln_big needs n >= 1, got {n}")
    shift = max(0, n.bit_length() - _LN_MANTISSA_BITS)
    return math.log(n >> shift) + shift * LN2


def two_order_mod_power_of_three(n: int) -> int:
    """Multiplicative order of 2 modulo 3^n."""
    return int(n_order(2, 3**n))


def assert_two_is_primitive_root(max_exponent: int) -> None:
    """Check that 2 generates the units modulo 3^n for 1 <= n <= max_exponent."""
    for n in range(1, max_exponent + 1):
        order = two_order_mod_power_of_three(n)
        if order != 2 * 3 ** (n - 1):
            raise NoSolution(
                f"2 is not a primitive root modulo 3^{n}",
                details={"order": order},
            )
    logger.debug(f"2 is a primitive root modulo 3^n for n <= {max_exponent}")


@lru_cache(maxsize=None)
def _cube_root_table(modulus: int, gamma: int) -> Dict[int, int]:
    return {pow(gamma, d, modulus): d for d in range(3)}


def _dlog_three_part(h: int, n: int) -> int:
    """Solve 4^x = h (mod 3^n) for x modulo 3^(n-1), one base-3 digit at a time."""
    modulus = 3**n
    order = 3 ** (n - 1)
    if order == 1:
        return 0
    gamma = pow(4, order // 3, modulus)
    table = _cube_root_table(modulus, gamma)
    g_inv = pow(4, -1, modulus)
    x = 0
    for k in range(n - 1):
        exp = order // 3 ** (k + 1)
        h_k = pow(pow(g_inv, x, modulus) * h % modulus, exp, modulus)
        digit = table.get(h_k)
        if digit is None:
            raise NoSolution(f"{h} is not a power of 4 modulo 3^{n}")
        x += digit * 3**k
    return x


def dlog2_mod_power_of_three(a: int, n: int) -> int:
    """Discrete log base 2 of a modulo 3^n, as the least x in [0, 2*3^(n-1)).

    Pohlig-Hellman over the cyclic unit group: the parity of x comes from
    a^(3^(n-1)) = +-1, the 3-adic part from a^2 = 4^x, and the two are joined
    by the Chinese remainder theorem.
    """
    if n < 1:
        raise InputValidationError(f"modulus exponent must be >= 1, got {n}")
    modulus = 3**n
    a %= modulus
    if a % 3 == 0:
        raise NoSolution(f"{a} is not a unit modulo 3^{n}")

    three_power = 3 ** (n - 1)
    sign = pow(a, three_power, modulus)
    if sign == 1:
        parity = 0
    elif sign == modulus - 1:
        parity = 1
    else:
        raise NoSolution(f"{a} has no discrete log base 2 modulo 3^{n}")

    if three_power == 1:
        x = parity
    else:
        three_part = _dlog_three_part(a * a % modulus, n)
        solution = crt([2, three_power], [parity, three_part])
        if solution is None:
            raise NoSolution(f"CRT failed for discrete log of {a} modulo 3^{n}")
        x = int(solution[0]) % (2 * three_power)

    if pow(2, x, modulus) != a:
        raise NoSolution(
            f"discrete log verification failed for {a} modulo 3^{n}", details={"x": x}
        )
    return x
