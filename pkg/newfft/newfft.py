"""
Conjugate-pair split-radix FFT with recursively rescaled subtransforms.

A plan of size N and variant l computes X_k / s(l*N, k), where variant 0 is
the plain DFT. Each recursive step splits x into the even samples (size N/2,
variant 0->0, 1->2, 2->4, 4->2) and the samples 4n+1 and 4n-1 (two size-N/4
transforms, always variant 1). The quarter-size outputs are combined with
t(N,k), which always has a unit real or imaginary part, so every non-trivial
twiddle product costs 2 multiplications and 2 additions.

The four variants have separate combine routines. Constants that are
exactly 1 are left out of the code path, never tested at run time.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from arithmetic.kernel import ExecutionContext, OpCounter
from constants.plan_cache import get_plan
from constants.scale import TwiddleT, UnitAxis, scale_factor, twiddle_t, variant_scale
from utils.errors import UnknownKindError, require_length, require_power_of_two
from utils.rng import random_complex_vector

VARIANTS = (0, 1, 2, 4)
CHILD_VARIANT = {0: 0, 1: 2, 2: 4, 4: 2}

Lists = Tuple[List[float], List[float]]


@dataclass(frozen=True)
class FftPlan:
    n: int
    variant: int
    half: Optional[FftPlan] = None
    quarter: Optional[FftPlan] = None
    twiddles: Tuple[TwiddleT, ...] = ()
    # per k: variant 0/2 -> (sum ratio, diff ratio); variant 4 -> one ratio per output line
    ratios: Tuple[Tuple[float, ...], ...] = ()
    base_scale: float = 1.0  # N=2, variant 4: 1/s(8,1)

    @property
    def conjugate_indices(self) -> List[int]:
        """Input indices (4n - 1) mod N feeding the second quarter-size transform."""
        return [(4 * m - 1) % self.n for m in range(self.n // 4)]


def _loop_ratios(n: int, variant: int, k: int) -> Tuple[float, ...]:
    s = scale_factor(n, k)
    if variant == 1:
        return ()
    if variant == 4:
        big = 4 * n
        return tuple(s / scale_factor(big, k + offset) for offset in (0, n // 2, n // 4, 3 * n // 4))
    return (s / variant_scale(variant, n, k), s / variant_scale(variant, n, k + n // 4))


def _build(n: int, variant: int) -> FftPlan:
    if n == 1:
        return FftPlan(n, variant)
    if n == 2:
        base = 1.0 / scale_factor(8, 1) if variant == 4 else 1.0
        return FftPlan(n, variant, base_scale=base)
    quarter_n = n // 4
    return FftPlan(
        n,
        variant,
        half=build_fft_plan(n // 2, CHILD_VARIANT[variant]),
        quarter=build_fft_plan(quarter_n, 1),
        twiddles=tuple(twiddle_t(n, k) for k in range(quarter_n)),
        ratios=tuple(_loop_ratios(n, variant, k) for k in range(quarter_n)),
    )


def build_fft_plan(n: int, variant: int = 0) -> FftPlan:
    require_power_of_two(n)
    if variant not in VARIANTS:
        raise UnknownKindError(f"FFT scaling variant must be one of {VARIANTS}, got {variant}")
    return get_plan("fft", n, variant, lambda: _build(n, variant))


def _twiddle_sum_diff(t: TwiddleT, zr: float, zi: float, pr: float, pi: float, ctx: ExecutionContext) -> Tuple[float, float, float, float]:
    """sum and difference of a = t*Z and b = conj(t)*Z'."""
    if t.is_one:
        ar, ai, br, bi = zr, zi, pr, pi
    elif t.diagonal:
        # t = 1 - i
        ar, ai = ctx.add(zr, zi), ctx.sub(zi, zr)
        br, bi = ctx.sub(pr, pi), ctx.add(pi, pr)
    elif t.unit_axis is UnitAxis.REAL:
        # t = 1 + i*tau
        tau = t.im
        ar, ai = ctx.sub(zr, ctx.mul(zi, tau)), ctx.add(zi, ctx.mul(zr, tau))
        br, bi = ctx.add(pr, ctx.mul(pi, tau)), ctx.sub(pi, ctx.mul(pr, tau))
    else:
        # t = c - i
        c = t.re
        ar, ai = ctx.add(ctx.mul(zr, c), zi), ctx.sub(ctx.mul(zi, c), zr)
        br, bi = ctx.sub(ctx.mul(pr, c), pi), ctx.add(ctx.mul(pi, c), pr)
    return ctx.add(ar, br), ctx.add(ai, bi), ctx.sub(ar, br), ctx.sub(ai, bi)


def _combine_unit(plan: FftPlan, u: Lists, z: Lists, p: Lists, ctx: ExecutionContext) -> Lists:
    """Variant 1: every ratio is 1."""
    n, q = plan.n, plan.n // 4
    ur, ui = u
    xr, xi = [0.0] * n, [0.0] * n
    for k in range(q):
        sr, si, dr, di = _twiddle_sum_diff(plan.twiddles[k], z[0][k], z[1][k], p[0][k], p[1][k], ctx)
        xr[k], xi[k] = ctx.add(ur[k], sr), ctx.add(ui[k], si)
        xr[k + 2 * q], xi[k + 2 * q] = ctx.sub(ur[k], sr), ctx.sub(ui[k], si)
        # U - i*diff and U + i*diff
        xr[k + q], xi[k + q] = ctx.add(ur[k + q], di), ctx.sub(ui[k + q], dr)
        xr[k + 3 * q], xi[k + 3 * q] = ctx.sub(ur[k + q], di), ctx.add(ui[k + q], dr)
    return xr, xi


def _combine_unscaled(plan: FftPlan, u: Lists, z: Lists, p: Lists, ctx: ExecutionContext) -> Lists:
    """Variant 0: both ratios equal s(N,k), which is 1 only at k = 0."""
    n, q = plan.n, plan.n // 4
    ur, ui = u
    xr, xi = [0.0] * n, [0.0] * n
    for k in range(q):
        sr, si, dr, di = _twiddle_sum_diff(plan.twiddles[k], z[0][k], z[1][k], p[0][k], p[1][k], ctx)
        if k:
            r0, r1 = plan.ratios[k]
            sr, si = ctx.mul(sr, r0), ctx.mul(si, r0)
            dr, di = ctx.mul(dr, r1), ctx.mul(di, r1)
        xr[k], xi[k] = ctx.add(ur[k], sr), ctx.add(ui[k], si)
        xr[k + 2 * q], xi[k + 2 * q] = ctx.sub(ur[k], sr), ctx.sub(ui[k], si)
        xr[k + q], xi[k + q] = ctx.add(ur[k + q], di), ctx.sub(ui[k + q], dr)
        xr[k + 3 * q], xi[k + 3 * q] = ctx.sub(ur[k + q], di), ctx.add(ui[k + q], dr)
    return xr, xi


def _combine_half(plan: FftPlan, u: Lists, z: Lists, p: Lists, ctx: ExecutionContext) -> Lists:
    """Variant 2: the sum ratio is 1 at k = 0, the diff ratio never is."""
    n, q = plan.n, plan.n // 4
    ur, ui = u
    xr, xi = [0.0] * n, [0.0] * n
    for k in range(q):
        sr, si, dr, di = _twiddle_sum_diff(plan.twiddles[k], z[0][k], z[1][k], p[0][k], p[1][k], ctx)
        r0, r1 = plan.ratios[k]
        if k:
            sr, si = ctx.mul(sr, r0), ctx.mul(si, r0)
        dr, di = ctx.mul(dr, r1), ctx.mul(di, r1)
        xr[k], xi[k] = ctx.add(ur[k], sr), ctx.add(ui[k], si)
        xr[k + 2 * q], xi[k + 2 * q] = ctx.sub(ur[k], sr), ctx.sub(ui[k], si)
        xr[k + q], xi[k + q] = ctx.add(ur[k + q], di), ctx.sub(ui[k + q], dr)
        xr[k + 3 * q], xi[k + 3 * q] = ctx.sub(ur[k + q], di), ctx.add(ui[k + q], dr)
    return xr, xi


def _combine_quarter(plan: FftPlan, u: Lists, z: Lists, p: Lists, ctx: ExecutionContext) -> Lists:
    """Variant 4: the ratio is applied after the butterfly, separately on each output line."""
    n, q = plan.n, plan.n // 4
    ur, ui = u
    xr, xi = [0.0] * n, [0.0] * n
    for k in range(q):
        sr, si, dr, di = _twiddle_sum_diff(plan.twiddles[k], z[0][k], z[1][k], p[0][k], p[1][k], ctx)
        c0, c2, c1, c3 = plan.ratios[k]
        ar, ai = ctx.add(ur[k], sr), ctx.add(ui[k], si)
        if k:
            ar, ai = ctx.mul(ar, c0), ctx.mul(ai, c0)
        xr[k], xi[k] = ar, ai
        br, bi = ctx.sub(ur[k], sr), ctx.sub(ui[k], si)
        xr[k + 2 * q], xi[k + 2 * q] = ctx.mul(br, c2), ctx.mul(bi, c2)
        cr, ci = ctx.add(ur[k + q], di), ctx.sub(ui[k + q], dr)
        xr[k + q], xi[k + q] = ctx.mul(cr, c1), ctx.mul(ci, c1)
        er, ei = ctx.sub(ur[k + q], di), ctx.add(ui[k + q], dr)
        xr[k + 3 * q], xi[k + 3 * q] = ctx.mul(er, c3), ctx.mul(ei, c3)
    return xr, xi


_COMBINE: Dict[int, Callable[[FftPlan, Lists, Lists, Lists, ExecutionContext], Lists]] = {
    0: _combine_unscaled,
    1: _combine_unit,
    2: _combine_half,
    4: _combine_quarter,
}


def _run(plan: FftPlan, xr: Sequence[float], xi: Sequence[float], ctx: ExecutionContext) -> Lists:
    n = plan.n
    if n == 1:
        return [xr[0]], [xi[0]]
    if n == 2:
        yr, yi = [ctx.add(xr[0], xr[1]), ctx.sub(xr[0], xr[1])], [ctx.add(xi[0], xi[1]), ctx.sub(xi[0], xi[1])]
        if plan.variant == 4:
            yr[1], yi[1] = ctx.mul(yr[1], plan.base_scale), ctx.mul(yi[1], plan.base_scale)
        return yr, yi
    u = _run(plan.half, xr[0::2], xi[0::2], ctx)  # type: ignore[arg-type]
    z = _run(plan.quarter, xr[1::4], xi[1::4], ctx)  # type: ignore[arg-type]
    conj = plan.conjugate_indices
    p = _run(plan.quarter, [xr[j] for j in conj], [xi[j] for j in conj], ctx)  # type: ignore[arg-type]
    return _COMBINE[plan.variant](plan, u, z, p, ctx)


def fft_scaled(plan: FftPlan, x, ctx: Optional[ExecutionContext] = None) -> np.ndarray:
    """X_k / s(variant*N, k) for the complex input x."""
    x = np.asarray(x, dtype=np.complex128)
    require_length(x, plan.n)
    ctx = ctx if ctx is not None else ExecutionContext.numeric()
    yr, yi = _run(plan, x.real.tolist(), x.imag.tolist(), ctx)
    return np.array(yr) + 1j * np.array(yi)


def fft(x, ctx: Optional[ExecutionContext] = None) -> np.ndarray:
    x = np.asarray(x, dtype=np.complex128)
    return fft_scaled(build_fft_plan(len(x), 0), x, ctx)


def fft_flop_measurement(n: int, seed: Optional[int] = None) -> OpCounter:
    """Audited run of the unscaled FFT of size n on pseudo-random input."""
    plan = build_fft_plan(n, 0)
    ctx = ExecutionContext.audited()
    fft_scaled(plan, random_complex_vector(n, seed), ctx)
    return ctx.snapshot()
