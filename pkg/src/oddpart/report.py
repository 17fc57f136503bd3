"""Deterministic JSON / CSV report containers shared by every verifier."""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field

SCHEMA_VERSION = 1

MATCH = "MATCH"
VALID_DIFFERENT_WITNESS = "VALID_DIFFERENT_WITNESS"
DISCREPANCY = "DISCREPANCY"


def dumps(obj) -> str:
    """Canonical JSON text: sorted keys, two-space indent, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _flat(value):
    if isinstance(value, (dict, list, tuple)):
        return json.dumps(value, sort_keys=True, ensure_ascii=False)
    return value


@dataclass
class TableReport:
    """Per-row verdicts for one reproduced table, plus free-form findings."""

    table: str
    rows: list[dict] = field(default_factory=list)
    findings: list[dict] = field(default_factory=list)
    summary: dict = field(default_factory=dict)

    def verdict_counts(self) -> dict[str, int]:
        counts: dict[str, int] = {}
        for row in self.rows:
            v = row.get("verdict")
            if v is not None:
                counts[v] = counts.get(v, 0) + 1
        return dict(sorted(counts.items()))

    @property
    def has_discrepancy(self) -> bool:
        return any(row.get("verdict") == DISCREPANCY for row in self.rows)

    @property
    def has_failure(self) -> bool:
        return any(row.get("verdict") == "FAIL" for row in self.rows)

    def exit_code(self) -> int:
        if self.has_failure:
            return 1
        if self.has_discrepancy or self.findings:
            return 10
        return 0

    def to_dict(self):
        return {
            "schema_version": SCHEMA_VERSION,
            "table": self.table,
            "summary": {**self.summary, "verdicts": self.verdict_counts()},
            "rows": self.rows,
            "findings": self.findings,
        }

    def to_json(self) -> str:
        return dumps(self.to_dict())

    def to_csv(self) -> str:
        keys: list[str] = []
        for row in self.rows:
            for k in row:
                if k not in keys:
                    keys.append(k)
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=keys, lineterminator="\n")
        writer.writeheader()
        for row in self.rows:
            writer.writerow({k: _flat(row.get(k, "")) for k in keys})
        return buf.getvalue()
