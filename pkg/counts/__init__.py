from .audit import (
    AT_MOST,
    AUDIT_KINDS,
    AsymptoticCheck,
    EXACT,
    AuditKind,
    CountReport,
    TableOneRow,
    audit,
    audit_range,
    doubling_sizes,
    fft_asymptotic_check,
    fft_leading_coefficient,
    get_audit_kind,
    is_data_independent,
    measure,
    table_one,
)
from .formulas import (
    FFT_LEADING_COEFFICIENT,
    Savings,
    dct3_unscaled_count_formula,
    dct4_count_formula,
    dct4_count_from_savings,
    mdct_count_formula,
    ms_formula,
    previous_dct4_count_formula,
    previous_mdct_count_formula,
    savings,
    scaled_dct3_count_formula,
    split_radix_count_formula,
)

__all__ = [
    "AT_MOST",
    "AUDIT_KINDS",
    "AsymptoticCheck",
    "EXACT",
    "AuditKind",
    "CountReport",
    "TableOneRow",
    "audit",
    "audit_range",
    "doubling_sizes",
    "fft_asymptotic_check",
    "fft_leading_coefficient",
    "get_audit_kind",
    "is_data_independent",
    "measure",
    "table_one",
    "FFT_LEADING_COEFFICIENT",
    "Savings",
    "dct3_unscaled_count_formula",
    "dct4_count_formula",
    "dct4_count_from_savings",
    "mdct_count_formula",
    "ms_formula",
    "previous_dct4_count_formula",
    "previous_mdct_count_formula",
    "savings",
    "scaled_dct3_count_formula",
    "split_radix_count_formula",
]
