from .butterflies import real_fused_product, real_twiddle_product
from .dct3 import (
    Dct3Plan,
    build_dct3_classic_plan,
    build_dct3_plan,
    dct3,
    dct3_classic,
    dct3_scaled,
    dst3,
    dst3_classic,
    dst3_scaled,
    execute_dct3,
    execute_dst3,
)
from .dct4 import (
    Dct4Plan,
    build_dct4_classic_plan,
    build_dct4_plan,
    build_dct4_scaled_output_plan,
    dct4,
    dct4_classic,
    dct4_involution,
    dct4_scaled_output,
    dst4,
    execute_dct4,
    execute_dst4,
)

__all__ = [
    "real_fused_product",
    "real_twiddle_product",
    "Dct3Plan",
    "build_dct3_plan",
    "build_dct3_classic_plan",
    "dct3",
    "dct3_classic",
    "dct3_scaled",
    "dst3",
    "dst3_classic",
    "dst3_scaled",
    "execute_dct3",
    "execute_dst3",
    "Dct4Plan",
    "build_dct4_plan",
    "build_dct4_classic_plan",
    "build_dct4_scaled_output_plan",
    "dct4",
    "dct4_classic",
    "dct4_involution",
    "dct4_scaled_output",
    "dst4",
    "execute_dct4",
    "execute_dst4",
]
