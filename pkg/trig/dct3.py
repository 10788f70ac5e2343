"""
Scaled-output DCT-III and DST-III.

A variant-l plan of size N computes

    C_k / s(4lN, 2k+1),   C_k = sum_n x_n cos[pi n (k + 1/2) / N]

(variant 0 is the unscaled transform). The recursion takes the even samples
into a half-size DCT-III (variant 0->0, 1->2, 2->4, 4->2) and folds the odd
samples into two quarter-size variant-1 transforms:

    w_k = x_{4k+1} + x_{4k-1}   (w_0 = x_1)
    v_k = x_{4k-1} - x_{4k+1}   (v_{N/4} = x_{N-1})

so that C_k and C_{N-1-k} share U_k +- Re(t(4N,2k+1) * (W_k + iV_k)) up to a
per-variant output ratio.

The classic plan is the same split with every scale factor equal to 1. It
multiplies by plain twiddles and is the baseline the scaled variants are
measured against.

DST-III inputs use 0-based storage: element j holds x_{j+1}.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np

from arithmetic.kernel import ExecutionContext
from constants.plan_cache import get_plan
from constants.scale import FusedConstant, TwiddleT, scale_factor, twiddle_t
from newfft.newfft import CHILD_VARIANT, VARIANTS
from trig.butterflies import real_fused_product, real_twiddle_product
from utils.errors import UnknownKindError, require_length, require_power_of_two

SQRT_HALF = math.cos(math.pi / 4)


@dataclass(frozen=True)
class Dct3Plan:
    n: int
    variant: int
    classic: bool = False
    half: Optional[Dct3Plan] = None
    quarter: Optional[Dct3Plan] = None
    twiddles: Tuple[TwiddleT, ...] = ()  # t(4N, 2k+1), k < N/2
    omegas: Tuple[FusedConstant, ...] = ()  # classic only: w_{4N}^{2k+1}
    ratios: Tuple[Tuple[float, ...], ...] = ()
    base: Tuple[float, ...] = ()  # folded constants of the N = 1, 2 cases

    @property
    def key(self) -> str:
        return "dct3-classic" if self.classic else f"dct3-l{self.variant}"


def _base_constants(n: int, variant: int, classic: bool) -> Tuple[float, ...]:
    if classic or variant == 0:
        return (SQRT_HALF,) if n == 2 else ()
    if n == 1:
        return {1: (), 2: (1.0 / scale_factor(8, 1),), 4: (1.0 / scale_factor(16, 1),)}[variant]
    if variant == 1:
        return (1.0 / scale_factor(8, 1),)
    if variant == 2:
        s = scale_factor(16, 1)
        return (1.0 / s, SQRT_HALF / s)
    return (SQRT_HALF, 1.0 / scale_factor(32, 1), 1.0 / scale_factor(32, 3))


def _loop_ratios(n: int, variant: int, k: int) -> Tuple[float, ...]:
    j = 2 * k + 1
    s = scale_factor(4 * n, j)
    if variant == 0:
        return (s,)
    if variant == 2:
        return (s / scale_factor(8 * n, j),)
    if variant == 4:
        return (s / scale_factor(16 * n, j), s / scale_factor(16 * n, 2 * n + j))
    return ()


def _classic_omega(n: int, k: int) -> FusedConstant:
    angle = math.pi * (2 * k + 1) / (2.0 * n)
    return FusedConstant(math.cos(angle), -math.sin(angle))


def _build(n: int, variant: int, classic: bool) -> Dct3Plan:
    base = _base_constants(n, variant, classic)
    if n <= 2:
        return Dct3Plan(n, variant, classic, base=base)
    half_n = n // 2
    if classic:
        return Dct3Plan(
            n,
            0,
            True,
            half=build_dct3_classic_plan(half_n),
            quarter=build_dct3_classic_plan(n // 4),
            omegas=tuple(_classic_omega(n, k) for k in range(half_n)),
        )
    return Dct3Plan(
        n,
        variant,
        False,
        half=build_dct3_plan(half_n, CHILD_VARIANT[variant]),
        quarter=build_dct3_plan(n // 4, 1),
        twiddles=tuple(twiddle_t(4 * n, 2 * k + 1) for k in range(half_n)),
        ratios=tuple(_loop_ratios(n, variant, k) for k in range(half_n)),
    )


def build_dct3_plan(n: int, variant: int = 0) -> Dct3Plan:
    require_power_of_two(n)
    if variant not in VARIANTS:
        raise UnknownKindError(f"DCT-III scaling variant must be one of {VARIANTS}, got {variant}")
    return get_plan("dct3", n, variant, lambda: _build(n, variant, False))


def build_dct3_classic_plan(n: int) -> Dct3Plan:
    require_power_of_two(n)
    return get_plan("dct3-classic", n, 0, lambda: _build(n, 0, True))


# === BASE CASES ===


def _size_one(plan: Dct3Plan, x: List[float], ctx: ExecutionContext) -> List[float]:
    if plan.base:
        return [ctx.mul(x[0], plan.base[0])]
    return [x[0]]


def _size_two(plan: Dct3Plan, x: List[float], ctx: ExecutionContext) -> List[float]:
    x0, x1 = x
    if plan.classic or plan.variant == 0:
        p = ctx.mul(x1, plan.base[0])
        return [ctx.add(x0, p), ctx.sub(x0, p)]
    if plan.variant == 1:
        p = ctx.mul(x0, plan.base[0])
        return [ctx.add(p, x1), ctx.sub(p, x1)]
    if plan.variant == 2:
        p, q = ctx.mul(x0, plan.base[0]), ctx.mul(x1, plan.base[1])
        return [ctx.add(p, q), ctx.sub(p, q)]
    c, first, second = plan.base
    p = ctx.mul(x1, c)
    return [ctx.mul(ctx.add(x0, p), first), ctx.mul(ctx.sub(x0, p), second)]


# === COMBINE LOOPS ===
# Each loop walks k < N/2. For k >= N/4 the quarter-size outputs are read
# mirrored, Z = W_{k'} - iV_{k'} with k' = N/2 - 1 - k.


def _loop_unit(plan: Dct3Plan, u: List[float], w: List[float], v: List[float], ctx: ExecutionContext) -> List[float]:
    n, q = plan.n, plan.n // 4
    out = [0.0] * n
    for k in range(n // 2):
        m = k if k < q else n // 2 - 1 - k
        r = real_twiddle_product(plan.twiddles[k], w[m], v[m], ctx, conjugate=k >= q)
        out[k] = ctx.add(u[k], r)
        out[n - 1 - k] = ctx.sub(u[k], r)
    return out


def _loop_single_ratio(plan: Dct3Plan, u: List[float], w: List[float], v: List[float], ctx: ExecutionContext) -> List[float]:
    """Variants 0 and 2: one ratio on the shared term, before the butterfly."""
    n, q = plan.n, plan.n // 4
    out = [0.0] * n
    for k in range(n // 2):
        m = k if k < q else n // 2 - 1 - k
        r = real_twiddle_product(plan.twiddles[k], w[m], v[m], ctx, conjugate=k >= q)
        r = ctx.mul(r, plan.ratios[k][0])
        out[k] = ctx.add(u[k], r)
        out[n - 1 - k] = ctx.sub(u[k], r)
    return out


def _loop_two_ratios(plan: Dct3Plan, u: List[float], w: List[float], v: List[float], ctx: ExecutionContext) -> List[float]:
    """Variant 4: C_k and C_{N-1-k} need different ratios, applied after the butterfly."""
    n, q = plan.n, plan.n // 4
    out = [0.0] * n
    for k in range(n // 2):
        m = k if k < q else n // 2 - 1 - k
        r = real_twiddle_product(plan.twiddles[k], w[m], v[m], ctx, conjugate=k >= q)
        first, second = plan.ratios[k]
        out[k] = ctx.mul(ctx.add(u[k], r), first)
        out[n - 1 - k] = ctx.mul(ctx.sub(u[k], r), second)
    return out


def _loop_classic(plan: Dct3Plan, u: List[float], w: List[float], v: List[float], ctx: ExecutionContext) -> List[float]:
    n, q = plan.n, plan.n // 4
    out = [0.0] * n
    for k in range(n // 2):
        m = k if k < q else n // 2 - 1 - k
        r = real_fused_product(plan.omegas[k], w[m], v[m], ctx, conjugate=k >= q)
        out[k] = ctx.add(u[k], r)
        out[n - 1 - k] = ctx.sub(u[k], r)
    return out


_LOOPS: Dict[int, Callable[[Dct3Plan, List[float], List[float], List[float], ExecutionContext], List[float]]] = {
    0: _loop_single_ratio,
    1: _loop_unit,
    2: _loop_single_ratio,
    4: _loop_two_ratios,
}


def execute_dct3(plan: Dct3Plan, x: List[float], ctx: ExecutionContext) -> List[float]:
    """Run the plan on a list of floats. Used by the other transforms' recursions."""
    n = plan.n
    if n == 1:
        return _size_one(plan, x, ctx)
    if n == 2:
        return _size_two(plan, x, ctx)
    q = n // 4
    u = execute_dct3(plan.half, x[0::2], ctx)  # type: ignore[arg-type]
    w = [x[1]] + [ctx.add(x[4 * k + 1], x[4 * k - 1]) for k in range(1, q)]
    v = [ctx.sub(x[4 * j + 3], x[4 * j + 5]) for j in range(q - 1)] + [x[n - 1]]
    wt = execute_dct3(plan.quarter, w, ctx)  # type: ignore[arg-type]
    vt = execute_dst3(plan.quarter, v, ctx)  # type: ignore[arg-type]
    loop = _loop_classic if plan.classic else _LOOPS[plan.variant]
    return loop(plan, u, wt, vt, ctx)


def execute_dst3(plan: Dct3Plan, x: List[float], ctx: ExecutionContext) -> List[float]:
    """DST-III through the DCT-III plan: reverse the input, negate odd outputs."""
    c = execute_dct3(plan, x[::-1], ctx)
    return [ctx.neg(value) if k % 2 else value for k, value in enumerate(c)]


def _as_floats(x, n: int) -> List[float]:
    values = np.asarray(x, dtype=np.float64)
    require_length(values, n)
    return values.tolist()


def dct3_scaled(plan: Dct3Plan, x, ctx: Optional[ExecutionContext] = None) -> np.ndarray:
    ctx = ctx if ctx is not None else ExecutionContext.numeric()
    return np.array(execute_dct3(plan, _as_floats(x, plan.n), ctx))


def dst3_scaled(plan: Dct3Plan, x, ctx: Optional[ExecutionContext] = None) -> np.ndarray:
    """Element j of x holds x_{j+1}. Same plan, same flop count as dct3_scaled."""
    ctx = ctx if ctx is not None else ExecutionContext.numeric()
    return np.array(execute_dst3(plan, _as_floats(x, plan.n), ctx))


def dct3(x, variant: int = 0, ctx: Optional[ExecutionContext] = None) -> np.ndarray:
    x = np.asarray(x, dtype=np.float64)
    return dct3_scaled(build_dct3_plan(len(x), variant), x, ctx)


def dst3(x, variant: int = 0, ctx: Optional[ExecutionContext] = None) -> np.ndarray:
    x = np.asarray(x, dtype=np.float64)
    return dst3_scaled(build_dct3_plan(len(x), variant), x, ctx)


def dct3_classic(x, ctx: Optional[ExecutionContext] = None) -> np.ndarray:
    x = np.asarray(x, dtype=np.float64)
    return dct3_scaled(build_dct3_classic_plan(len(x)), x, ctx)


def dst3_classic(x, ctx: Optional[ExecutionContext] = None) -> np.ndarray:
    x = np.asarray(x, dtype=np.float64)
    return dst3_scaled(build_dct3_classic_plan(len(x)), x, ctx)
