import json
import os
import sys
import time
import uuid
from datetime import datetime
from enum import Enum
from typing import Any, Dict, List, Optional, Union

import config.config as config


class LogType(Enum):
    """Enumeration of all valid log types for event logging."""

    # Core system events
    SESSION_START = "session_start"
    RUN_METADATA = "run_metadata"
    INFO = "info"
    ERROR = "error"

    # Command events
    TRANSFORM = "transform"
    COUNT_AUDIT = "count_audit"
    VERIFY = "verify"


# Global run ID - generated once per process
_current_run_id: Optional[str] = None
_start_time: Optional[float] = None


def get_current_run_id() -> str:
    """Get or generate the current run ID."""
    global _current_run_id
    if _current_run_id is None:
        _current_run_id = str(uuid.uuid4())[:8]
    return _current_run_id


def set_start_time(start_time: float) -> None:
    """Set the start time for elapsed time calculations."""
    global _start_time
    _start_time = start_time


def get_elapsed_time() -> str:
    """Get elapsed time since start as formatted string (HH:MM:SS)."""
    if _start_time is None:
        return "00:00:00"

    elapsed = time.time() - _start_time
    hours = int(elapsed // 3600)
    minutes = int((elapsed % 3600) // 60)
    seconds = int(elapsed % 60)
    return f"{hours:02d}:{minutes:02d}:{seconds:02d}"


def event_print(message: str, log_type: Optional[LogType] = None, data: Optional[Dict[str, Any]] = None, log_dir: Optional[str] = None) -> None:
    """
    Print a status line with elapsed time to stderr and optionally log it.

    stdout carries transform output and count tables only.
    """
    elapsed = get_elapsed_time()
    print(f"[{elapsed}] {message}", file=sys.stderr)

    if log_type is not None:
        log_data = {"message": message}
        if data:
            log_data.update(data)
        log_json_entry(log_type, log_data, config.OUTPUT_FOLDER if log_dir is None else log_dir)


def config_snapshot() -> Dict[str, Any]:
    """Current UPPER_CASE configuration values, overrides included."""
    return {name: getattr(config, name) for name in dir(config) if name.isupper() and not name.startswith("_")}


def create_run_metadata(run_id: str) -> Dict[str, Any]:
    now = int(time.time())
    return {
        "run_id": run_id,
        "start_time": now,
        "start_time_iso": datetime.fromtimestamp(now).isoformat(),
        "config": config_snapshot(),
    }


def append_to_log_file(log_dir: str, filename: str, entry: Dict[str, Any]) -> None:
    """Append a JSON entry to a log file holding a JSON array."""
    filepath = os.path.join(log_dir, filename)
    os.makedirs(log_dir, exist_ok=True)

    entries: List[Dict[str, Any]] = []
    if os.path.exists(filepath):
        try:
            with open(filepath, "r", encoding="utf-8") as f:
                entries = json.load(f)
        except (json.JSONDecodeError, IOError):
            entries = []

    entries.append(entry)
    with open(filepath, "w", encoding="utf-8") as f:
        json.dump(entries, f, indent=config.JSON_INDENT, ensure_ascii=False)


def log_json_entry(
    log_type: Union[LogType, str],
    data: Dict[str, Any],
    log_dir: str,
    run_id: Optional[str] = None,
    auto_print: bool = False,
    print_message: Optional[str] = None,
) -> Optional[str]:
    """
    Log a JSON entry with timestamp to a run-specific event log file.

    Args:
        log_type: Type of log entry (LogType enum or its string value)
        data: Payload merged into the entry
        log_dir: Directory where log files are stored; empty disables writing
        run_id: Optional run ID. If not provided, uses the current global run ID.
        auto_print: If True, also print the message with elapsed time
        print_message: Custom message to print. Defaults to data["message"]

    Returns:
        Path to the event log file, or None when logging to disk is disabled
    """
    if run_id is None:
        run_id = get_current_run_id()

    log_type_str = log_type.value if isinstance(log_type, LogType) else log_type
    timestamp = int(time.time())
    iso_timestamp = datetime.fromtimestamp(timestamp).isoformat()
    elapsed_time = get_elapsed_time()

    if auto_print:
        message = print_message or data.get("message", f"{log_type_str} event")
        print(f"[{elapsed_time}] {message}", file=sys.stderr)

    if not log_dir:
        return None

    entry = {"timestamp": timestamp, "iso_timestamp": iso_timestamp, "type": log_type_str, "run_id": run_id, "elapsed_time": elapsed_time, **data}
    filename = f"{run_id}-event-log.json"
    filepath = os.path.join(log_dir, filename)

    # First entry of a run records the configuration it ran with
    if not os.path.exists(filepath):
        metadata_entry = {
            "timestamp": timestamp,
            "iso_timestamp": iso_timestamp,
            "type": LogType.RUN_METADATA.value,
            **create_run_metadata(run_id),
        }
        append_to_log_file(log_dir, filename, metadata_entry)
        append_to_log_file(log_dir, "all-run-log.json", metadata_entry)

    append_to_log_file(log_dir, filename, entry)
    append_to_log_file(log_dir, "all-run-log.json", entry)
    return filepath


def read_json_logs(log_dir: str, log_type: Optional[str] = None) -> List[Dict[str, Any]]:
    """
    Read run event logs from a directory.

    Args:
        log_dir: Directory containing log files
        log_type: Optional filter by log type value

    Returns:
        List of entries, sorted by timestamp
    """
    if not log_dir or not os.path.exists(log_dir):
        return []

    logs: List[Dict[str, Any]] = []
    for filename in sorted(os.listdir(log_dir)):
        if not filename.endswith("-event-log.json"):
            continue
        filepath = os.path.join(log_dir, filename)
        try:
            with open(filepath, "r", encoding="utf-8") as f:
                data = json.load(f)
        except (json.JSONDecodeError, IOError) as e:
            print(f"[⚠️] Error reading log file {filepath}: {e}", file=sys.stderr)
            continue

        for entry in data if isinstance(data, list) else [data]:
            if isinstance(entry, dict) and (log_type is None or entry.get("type") == log_type):
                logs.append(entry)

    logs.sort(key=lambda x: x.get("timestamp", 0))
    return logs


def get_latest_log_entry(log_dir: str, log_type: str) -> Optional[Dict[str, Any]]:
    logs = read_json_logs(log_dir, log_type)
    return logs[-1] if logs else None
