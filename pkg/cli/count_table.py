"""
Count tables in CSV (one header line, one line per row) or JSON (array of records).
"""

from __future__ import annotations

import csv
import io
import json
from typing import Iterable, List, Optional

import config.config as config
from counts.audit import CountReport, TableOneRow
from event_logging.run_manager import get_run_file_path

COLUMNS = ("kind", "n", "adds", "mults", "flops", "predicted", "match")
TABLE_ONE_COLUMNS = ("n", "previous", "new")


def sort_reports(reports: Iterable[CountReport]) -> List[CountReport]:
    return sorted(reports, key=lambda report: (report.kind, report.n))


def _csv_cell(field: object) -> object:
    return str(field).lower() if isinstance(field, bool) else field


def _write_csv(header: Iterable[str], rows: Iterable[Iterable[object]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, delimiter=config.CSV_SEPARATOR, lineterminator=config.CSV_LINE_END)
    writer.writerow(header)
    writer.writerows([_csv_cell(field) for field in row] for row in rows)
    return buffer.getvalue()


def reports_to_csv(reports: Iterable[CountReport]) -> str:
    rows = (report.as_row() for report in sort_reports(reports))
    return _write_csv(COLUMNS, ([row[column] for column in COLUMNS] for row in rows))


def reports_to_json(reports: Iterable[CountReport]) -> str:
    records = []
    for report in sort_reports(reports):
        row = report.as_row()
        records.append({column: row[column] for column in COLUMNS})
    return json.dumps(records, indent=config.JSON_INDENT) + "\n"


def format_reports(reports: Iterable[CountReport], fmt: str) -> str:
    return reports_to_json(reports) if fmt == "json" else reports_to_csv(reports)


def table_one_to_csv(rows: Iterable[TableOneRow]) -> str:
    return _write_csv(TABLE_ONE_COLUMNS, ((row.n, row.previous, row.new) for row in rows))


def save_table(text: str, filename: str) -> Optional[str]:
    """Write the table under the run folder when an output folder is configured."""
    if not config.OUTPUT_FOLDER:
        return None
    path = get_run_file_path(config.OUTPUT_FOLDER, "counts", filename)
    with open(path, "w", encoding="utf-8") as f:
        f.write(text)
    return path
