"""
CSV report writing. One row per spanner, columns in REPORT_FIELDS order.
"""

import csv
import os
import threading

from analysis.report import REPORT_FIELDS


def write_report_csv(rows: list[dict], path: str) -> None:
    with ReportWriter(path) as writer:
        for row in rows:
            writer.write(row)


class ReportWriter:
    """Appends rows as they arrive and flushes after each one; safe to share between threads."""

    def __init__(self, path: str):
        self.path = path
        self._lock = threading.Lock()
        self._file = None
        self._writer = None
        self.rows_written = 0

    def __enter__(self) -> 'ReportWriter':
        os.makedirs(os.path.dirname(self.path) or '.', exist_ok=True)
        self._file = open(self.path, 'w', encoding='utf-8', newline='')
        self._writer = csv.DictWriter(self._file, fieldnames=REPORT_FIELDS, lineterminator='\n')
        self._writer.writeheader()
        self._file.flush()
        return self

    def write(self, row: dict) -> None:
        with self._lock:
            self._writer.writerow({k: row.get(k, '') for k in REPORT_FIELDS})
            self._file.flush()
            self.rows_written += 1

    def __exit__(self, exc_type, exc, tb) -> None:
        if self._file is not None:
            self._file.close()
            self._file = None
