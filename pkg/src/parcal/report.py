"""Canonical machine-readable run reports.

Reports serialize deterministically: JSON with sorted keys and fixed
separators, or a flat key/value TSV.  Timing is zero unless explicitly
measured, so default reports are byte-reproducible run to run.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any


@dataclass
class Report:
    subcommand: str
    inputs: dict
    mode: str
    result: Any
    witness: Any = None
    timing_ms: int = 0
    figures: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        doc = {
            "subcommand": self.subcommand,
            "inputs": self.inputs,
            "mode": self.mode,
            "result": self.result,
            "timing_ms": self.timing_ms,
        }
        if self.witness is not None:
            doc["witness"] = self.witness
        if self.figures:
            doc["figures"] = self.figures
        return doc

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True,
                          separators=(",", ":")) + "\n"

    def to_tsv(self) -> str:
        rows: list[tuple[str, str]] = []

        def walk(prefix: str, value) -> None:
            if isinstance(value, dict):
                for k in sorted(value):
                    walk(f"{prefix}.{k}" if prefix else str(k), value[k])
            elif isinstance(value, (list, tuple)):
                rows.append((prefix, json.dumps(list(value),
                                                separators=(",", ":"))))
            else:
                rows.append((prefix, json.dumps(value)))

        walk("", self.to_dict())
        return "".join(f"{k}\t{v}\n" for k, v in rows)

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return self.to_json()
        if fmt == "tsv":
            return self.to_tsv()
        raise ValueError(f"unknown format {fmt!r}")
