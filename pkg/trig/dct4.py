"""
DCT-IV from half-size scaled DCT-III and DST-III, and DST-IV on top of it.

    C_k = sum_n x_n cos[pi (n + 1/2)(k + 1/2) / N]

The inputs fold into w_k = x_{2k} + x_{2k-1} (w_0 = x_0) and
v_k = x_{2k-1} - x_{2k} (v_{N/2} = x_{N-1}); with W and V their variant-1
transforms, C_k = Re(w_{8N}^{2k+1} s(2N,2k+1) (W_k + iV_k)), where the upper
half of the outputs reads W, V mirrored and conjugated.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Optional, Tuple, Union

import numpy as np

from arithmetic.kernel import ExecutionContext
from constants.plan_cache import get_plan
from constants.scale import FusedConstant, TwiddleT, fused_dct4_constant, twiddle_t
from trig.butterflies import real_fused_product, real_twiddle_product
from trig.dct3 import Dct3Plan, build_dct3_classic_plan, build_dct3_plan, execute_dct3, execute_dst3
from utils.errors import require_length, require_power_of_two


@dataclass(frozen=True)
class Dct4Plan:
    n: int
    scaled_output: bool = False
    classic: bool = False
    half: Optional[Dct3Plan] = None
    # fused constants, or t(8N, 2k+1) when the output is scaled by 1/s(8N, 2k+1)
    constants: Tuple[Union[FusedConstant, TwiddleT], ...] = ()
    base: float = 0.0  # N = 1: cos(pi/4)


def _classic_constant(n: int, k: int) -> FusedConstant:
    angle = math.pi * (2 * k + 1) / (4.0 * n)
    return FusedConstant(math.cos(angle), -math.sin(angle))


def _build(n: int, scaled_output: bool, classic: bool) -> Dct4Plan:
    if n == 1:
        return Dct4Plan(n, scaled_output, classic, base=math.cos(math.pi / 4))
    if classic:
        return Dct4Plan(n, False, True, build_dct3_classic_plan(n // 2), tuple(_classic_constant(n, k) for k in range(n)))
    if scaled_output:
        return Dct4Plan(n, True, False, build_dct3_plan(n // 2, 1), tuple(twiddle_t(8 * n, 2 * k + 1) for k in range(n)))
    return Dct4Plan(n, False, False, build_dct3_plan(n // 2, 1), tuple(fused_dct4_constant(n, k) for k in range(n)))


def build_dct4_plan(n: int) -> Dct4Plan:
    require_power_of_two(n)
    return get_plan("dct4", n, 0, lambda: _build(n, False, False))


def build_dct4_scaled_output_plan(n: int) -> Dct4Plan:
    require_power_of_two(n)
    return get_plan("dct4-scaled", n, 8, lambda: _build(n, True, False))


def build_dct4_classic_plan(n: int) -> Dct4Plan:
    require_power_of_two(n)
    return get_plan("dct4-classic", n, 0, lambda: _build(n, False, True))


def execute_dct4(plan: Dct4Plan, x: List[float], ctx: ExecutionContext) -> List[float]:
    n = plan.n
    if n == 1:
        # C_0 / s(8,1) = x_0 exactly
        return [x[0]] if plan.scaled_output else [ctx.mul(x[0], plan.base)]
    h = n // 2
    w = [x[0]] + [ctx.add(x[2 * k], x[2 * k - 1]) for k in range(1, h)]
    v = [ctx.sub(x[2 * k - 1], x[2 * k]) for k in range(1, h)] + [x[n - 1]]
    wt = execute_dct3(plan.half, w, ctx)  # type: ignore[arg-type]
    vt = execute_dst3(plan.half, v, ctx)  # type: ignore[arg-type]

    product = real_twiddle_product if plan.scaled_output else real_fused_product
    out = [0.0] * n
    for k in range(n):
        m = k if k < h else n - 1 - k
        out[k] = product(plan.constants[k], wt[m], vt[m], ctx, conjugate=k >= h)  # type: ignore[arg-type]
    return out


def _as_floats(x, n: Optional[int] = None) -> List[float]:
    values = np.asarray(x, dtype=np.float64)
    if n is not None:
        require_length(values, n)
    return values.tolist()


def dct4(x, ctx: Optional[ExecutionContext] = None, plan: Optional[Dct4Plan] = None) -> np.ndarray:
    values = _as_floats(x)
    plan = plan if plan is not None else build_dct4_plan(len(values))
    require_length(values, plan.n)
    ctx = ctx if ctx is not None else ExecutionContext.numeric()
    return np.array(execute_dct4(plan, values, ctx))


def dct4_scaled_output(x, ctx: Optional[ExecutionContext] = None) -> np.ndarray:
    """DCT-IV divided by s(8N, 2k+1): N fewer multiplications than dct4."""
    values = _as_floats(x)
    ctx = ctx if ctx is not None else ExecutionContext.numeric()
    return np.array(execute_dct4(build_dct4_scaled_output_plan(len(values)), values, ctx))


def dct4_classic(x, ctx: Optional[ExecutionContext] = None) -> np.ndarray:
    values = _as_floats(x)
    ctx = ctx if ctx is not None else ExecutionContext.numeric()
    return np.array(execute_dct4(build_dct4_classic_plan(len(values)), values, ctx))


def execute_dst4(plan: Dct4Plan, x: List[float], ctx: ExecutionContext) -> List[float]:
    """S_{N-1-k} is the DCT-IV of (-1)^n x_n."""
    signed = [ctx.neg(value) if n % 2 else value for n, value in enumerate(x)]
    return execute_dct4(plan, signed, ctx)[::-1]


def dst4(x, ctx: Optional[ExecutionContext] = None) -> np.ndarray:
    values = _as_floats(x)
    ctx = ctx if ctx is not None else ExecutionContext.numeric()
    return np.array(execute_dst4(build_dct4_plan(len(values)), values, ctx))


def dct4_involution(x, ctx: Optional[ExecutionContext] = None) -> np.ndarray:
    """dct4(dct4(x)), which equals (N/2) x."""
    return dct4(dct4(x, ctx), ctx)
