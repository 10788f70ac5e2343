"""
Closed-form flop counts, evaluated in exact rational arithmetic.

Every formula here is integral for N = 2^m; the helpers refuse to round.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from utils.errors import require_power_of_two

FFT_LEADING_COEFFICIENT = Fraction(34, 9)


def _integral(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise ArithmeticError(f"{what} evaluated to non-integer {value}")
    return value.numerator


def dct4_count_formula(n: int) -> int:
    """(17/9) N log2 N + (31/27) N + (2/9)(-1)^m log2 N - (4/27)(-1)^m."""
    m = require_power_of_two(n)
    sign = (-1) ** m
    value = Fraction(17, 9) * n * m + Fraction(31, 27) * n + Fraction(2, 9) * sign * m - Fraction(4, 27) * sign
    return _integral(value, f"dct4_count_formula({n})")


def dct3_unscaled_count_formula(n: int) -> int:
    m = require_power_of_two(n)
    return 2 * n * m - n + 1


def ms_formula(n: int) -> int:
    """Flops saved by the variant-1 DCT-III over the unscaled one."""
    m = require_power_of_two(n)
    sign = (-1) ** m
    value = Fraction(1, 9) * n * m - Fraction(1, 27) * n + Fraction(1, 9) * sign * m + Fraction(1, 27) * sign
    return _integral(value, f"ms_formula({n})")


def mdct_count_formula(n: int) -> int:
    return dct4_count_formula(n) + n


def split_radix_count_formula(n: int) -> int:
    """Complex split-radix FFT flops, meaningful for N >= 2."""
    m = require_power_of_two(n)
    return 4 * n * m - 6 * n + 8


def previous_dct4_count_formula(n: int) -> int:
    m = require_power_of_two(n)
    return 2 * n * m + n


def previous_mdct_count_formula(n: int) -> int:
    m = require_power_of_two(n)
    return 2 * n * m + 2 * n


def dct4_count_from_savings(n: int) -> int:
    """2N log2 N + N - 2 M_S(N/2), for N >= 2."""
    m = require_power_of_two(n)
    return 2 * n * m + n - 2 * ms_formula(n // 2)


@dataclass(frozen=True)
class Savings:
    """Flops saved against the unscaled DCT-III by each scaling variant (negative means spent)."""

    m: int  # variant 0
    ms: int  # variant 1
    ms2: int  # variant 2
    ms4: int  # variant 4

    def for_variant(self, variant: int) -> int:
        return {0: self.m, 1: self.ms, 2: self.ms2, 4: self.ms4}[variant]


@lru_cache(maxsize=None)
def savings(n: int) -> Savings:
    """
    Exact solution of the savings recurrences:

        M(N)    = M(N/2)    + 2 M_S(N/4)
        M_S(N)  = M_S2(N/2) + 2 M_S(N/4) + N/2
        M_S2(N) = M_S4(N/2) + 2 M_S(N/4)
        M_S4(N) = M_S2(N/2) + 2 M_S(N/4) - N/2
    """
    require_power_of_two(n)
    if n == 1:
        return Savings(0, 0, -1, -1)
    if n == 2:
        return Savings(0, 0, -1, -2)
    half, quarter = savings(n // 2), savings(n // 4)
    shared = 2 * quarter.ms
    return Savings(
        m=half.m + shared,
        ms=half.ms2 + shared + n // 2,
        ms2=half.ms4 + shared,
        ms4=half.ms2 + shared - n // 2,
    )


def scaled_dct3_count_formula(n: int, variant: int) -> int:
    return dct3_unscaled_count_formula(n) - savings(n).for_variant(variant)
