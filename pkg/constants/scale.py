"""
Scale factors s(N,k), modified twiddles t(N,k) and fused output constants.

s(N,k) is defined for N a power of two by

    s(N,k) = 1                                  for N <= 4
    s(N,k) = s(N/4, k4) * cos(2*pi*k4/N)        for k4 <= N/8
    s(N,k) = s(N/4, k4) * sin(2*pi*k4/N)        otherwise

with k4 = k mod N/4. It is periodic in N/4 and symmetric about N/8, and the
implementation folds every index onto 0 <= k4 <= N/8 before evaluating, so
both properties hold bit-for-bit.

All of this is data-independent and is only evaluated while building plans.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Tuple

from utils.errors import IndexRangeError, require_power_of_two


def _canonical_index(n: int, k: int) -> int:
    quarter = n // 4
    k4 = k % quarter
    if 8 * k4 > n:
        k4 = quarter - k4
    return k4


@lru_cache(maxsize=None)
def _scale(n: int, k4: int) -> float:
    if n <= 4 or k4 == 0:
        return 1.0
    child = n // 4
    inner = _scale(child, _canonical_index(child, k4)) if child > 4 else 1.0
    return inner * math.cos(2.0 * math.pi * k4 / n)


def scale_factor(n: int, k: int) -> float:
    """s(n,k) for a power-of-two n and 0 <= k < n."""
    require_power_of_two(n)
    if not 0 <= k < n:
        raise IndexRangeError(f"scale_factor: k={k} outside [0, {n})")
    if n <= 4:
        return 1.0
    return _scale(n, _canonical_index(n, k))


def variant_scale(variant: int, n: int, k: int) -> float:
    """s(variant*n, k), with variant 0 meaning no scaling at all."""
    if variant == 0:
        return 1.0
    return scale_factor(variant * n, k)


@dataclass(frozen=True)
class ScaleTable:
    n: int
    values: Tuple[float, ...]  # s(n,k) for 0 <= k < max(n/4, 1)

    def __getitem__(self, k: int) -> float:
        return self.values[k % len(self.values)]


@lru_cache(maxsize=None)
def scale_table(n: int) -> ScaleTable:
    require_power_of_two(n)
    period = max(n // 4, 1)
    return ScaleTable(n, tuple(scale_factor(n, k) for k in range(period)))


class UnitAxis(Enum):
    REAL = "real"
    IMAGINARY = "imaginary"


@dataclass(frozen=True)
class TwiddleT:
    """
    t(N,k) = w_N^k * s(N/4,k) / s(N,k).

    For k <= N/8 it is 1 - i*tan(2*pi*k/N) and re is the literal 1.0; above
    N/8 it is cot(2*pi*k/N) - i and im is the literal -1.0. At k = N/8 it is
    exactly 1 - i and `diagonal` is set.
    """

    re: float
    im: float
    unit_axis: UnitAxis
    diagonal: bool = False

    @property
    def is_one(self) -> bool:
        return self.re == 1.0 and self.im == 0.0

    def conjugate(self) -> TwiddleT:
        return TwiddleT(self.re, -self.im, self.unit_axis, self.diagonal)

    def as_complex(self) -> complex:
        return complex(self.re, self.im)


def twiddle_t(n: int, k: int) -> TwiddleT:
    require_power_of_two(n)
    if n < 4:
        raise IndexRangeError(f"twiddle_t needs N >= 4, got {n}")
    if not 0 <= k < n // 4:
        raise IndexRangeError(f"twiddle_t: k={k} outside [0, {n // 4})")
    if k == 0:
        return TwiddleT(1.0, 0.0, UnitAxis.REAL)
    if 8 * k == n:
        return TwiddleT(1.0, -1.0, UnitAxis.REAL, diagonal=True)
    if 8 * k < n:
        return TwiddleT(1.0, -math.tan(2.0 * math.pi * k / n), UnitAxis.REAL)
    # cot(2*pi*k/n) evaluated as tan of the complementary angle
    return TwiddleT(math.tan(2.0 * math.pi * (n // 4 - k) / n), -1.0, UnitAxis.IMAGINARY)


def omega(n: int, k: int) -> complex:
    """w_n^k = exp(-2*pi*i*k/n), with k reduced exactly before the angle is formed."""
    k %= n
    angle = 2.0 * math.pi * k / n
    return complex(math.cos(angle), -math.sin(angle))


@dataclass(frozen=True)
class FusedConstant:
    re: float
    im: float

    def as_complex(self) -> complex:
        return complex(self.re, self.im)


def fused_dct4_constant(n: int, k: int) -> FusedConstant:
    """w_{8n}^{2k+1} * s(2n, 2k+1), the output constant of the DCT-IV loop."""
    require_power_of_two(n)
    if not 0 <= k < n:
        raise IndexRangeError(f"fused_dct4_constant: k={k} outside [0, {n})")
    angle = math.pi * (2 * k + 1) / (4.0 * n)
    s = scale_factor(2 * n, 2 * k + 1)
    return FusedConstant(math.cos(angle) * s, -math.sin(angle) * s)
