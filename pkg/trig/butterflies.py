"""
Real part of constant-times-Z products, the inner step of every DCT loop.

Z = W + iV arrives as its two real components. When the caller needs the
conjugate W - iV (the mirrored half of a loop) it passes conjugate=True and
the sign is folded into the addition instead of being applied to V.
"""

from __future__ import annotations

from arithmetic.kernel import ExecutionContext
from constants.scale import FusedConstant, TwiddleT, UnitAxis


def real_twiddle_product(t: TwiddleT, zr: float, zi: float, ctx: ExecutionContext, conjugate: bool = False) -> float:
    """Re(t*Z) in 1 multiplication and 1 addition."""
    if t.unit_axis is UnitAxis.REAL:
        # t = 1 + i*tau: Re = zr - tau*zi
        p = ctx.mul(zi, t.im)
        return ctx.add(zr, p) if conjugate else ctx.sub(zr, p)
    # t = c - i: Re = c*zr + zi
    p = ctx.mul(zr, t.re)
    return ctx.sub(p, zi) if conjugate else ctx.add(p, zi)


def real_fused_product(f: FusedConstant, zr: float, zi: float, ctx: ExecutionContext, conjugate: bool = False) -> float:
    """Re(f*Z) for a general constant: 2 multiplications and 1 addition."""
    a = ctx.mul(zr, f.re)
    b = ctx.mul(zi, f.im)
    return ctx.add(a, b) if conjugate else ctx.sub(a, b)
