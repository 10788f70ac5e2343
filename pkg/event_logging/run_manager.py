"""
Run management utilities for placing saved tables and vectors by run ID.
"""

import os
from typing import Optional

from .event_logger import get_current_run_id


def get_run_folder(base_folder: str, kind: str, run_id: Optional[str] = None) -> str:
    """
    Get the run-specific artifact folder, creating it if needed.

    Args:
        base_folder: Output folder (config.OUTPUT_FOLDER)
        kind: Artifact kind, e.g. "counts" or "vectors"
        run_id: Optional run ID. If not provided, uses current run ID.

    Returns:
        <base_folder>/<run_id>-<kind>
    """
    if run_id is None:
        run_id = get_current_run_id()

    run_folder = os.path.join(base_folder, f"{run_id}-{kind}")
    os.makedirs(run_folder, exist_ok=True)
    return run_folder


def get_run_file_path(base_folder: str, kind: str, filename: str, run_id: Optional[str] = None) -> str:
    return os.path.join(get_run_folder(base_folder, kind, run_id), filename)
