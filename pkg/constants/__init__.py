from .plan_cache import cached_plan_keys, clear_plan_cache, get_plan
from .scale import (
    FusedConstant,
    ScaleTable,
    TwiddleT,
    UnitAxis,
    fused_dct4_constant,
    omega,
    scale_factor,
    scale_table,
    twiddle_t,
    variant_scale,
)

__all__ = [
    "FusedConstant",
    "ScaleTable",
    "TwiddleT",
    "UnitAxis",
    "fused_dct4_constant",
    "omega",
    "scale_factor",
    "scale_table",
    "twiddle_t",
    "variant_scale",
    "get_plan",
    "cached_plan_keys",
    "clear_plan_cache",
]
