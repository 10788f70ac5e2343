from .commands import EXIT_CHECK_FAILED, EXIT_OK, EXIT_USAGE, TRANSFORMS, build_parser, reference_transform, run_transform, verify_errors
from .count_table import format_reports, reports_to_csv, reports_to_json, save_table, table_one_to_csv
from .vector_file import format_vector, read_vector, write_vector

__all__ = [
    "EXIT_OK",
    "EXIT_CHECK_FAILED",
    "EXIT_USAGE",
    "TRANSFORMS",
    "build_parser",
    "reference_transform",
    "run_transform",
    "verify_errors",
    "format_reports",
    "reports_to_csv",
    "reports_to_json",
    "save_table",
    "table_one_to_csv",
    "format_vector",
    "read_vector",
    "write_vector",
]
