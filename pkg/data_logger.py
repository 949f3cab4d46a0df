"""
Per-trial records of `verify` runs and their persistence.

Responsibilities:
- Buffer one record per checked case (monoid, suite, case, passed, repro)
- Flush the buffer to CSV with pandas and summarize pass counts per suite
"""

from __future__ import annotations

import logging
from pathlib import Path
from typing import Any, Dict, List

import pandas as pd

logger = logging.getLogger(__name__)

COLUMNS = ["monoid", "suite", "case", "passed", "repro"]


class DataLogger:
    """Collects verify trial records and writes them as one CSV table."""

    def __init__(self, path: Path | str = "data/verify_trials.csv") -> None:
        self.path = Path(path)
        self.records: List[Dict[str, Any]] = []

    def log(self, payload: Dict[str, Any]) -> None:
        """Buffer a record for later flush to disk."""
        self.records.append(payload)

    def frame(self) -> pd.DataFrame:
        return pd.DataFrame(self.records, columns=COLUMNS)

    def summary(self) -> pd.DataFrame:
        """Checked and passed counts per (monoid, suite)."""
        df = self.frame()
        if df.empty:
            return pd.DataFrame(columns=["monoid", "suite", "checked", "passed"])
        df["passed"] = df["passed"].astype(bool)
        grouped = df.groupby(["monoid", "suite"], sort=False)["passed"]
        return grouped.agg(checked="size", passed="sum").reset_index()

    def flush(self) -> Path | None:
        """Append buffered records to the CSV file and clear the buffer."""
        if not self.records:
            return None
        self.path.parent.mkdir(parents=True, exist_ok=True)
        header = not self.path.exists()
        self.frame().to_csv(self.path, mode="a", header=header, index=False)
        logger.info("wrote %d trial records to %s", len(self.records), self.path)
        self.records.clear()
        return self.path
