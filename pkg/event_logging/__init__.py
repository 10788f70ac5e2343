"""
Event logging utilities for trigflop runs.
"""

from .event_logger import (
    LogType,
    append_to_log_file,
    event_print,
    get_current_run_id,
    get_latest_log_entry,
    log_json_entry,
    read_json_logs,
    set_start_time,
)
from .run_manager import get_run_file_path, get_run_folder

__all__ = [
    "LogType",
    "log_json_entry",
    "event_print",
    "read_json_logs",
    "get_latest_log_entry",
    "append_to_log_file",
    "get_current_run_id",
    "set_start_time",
    "get_run_folder",
    "get_run_file_path",
]
