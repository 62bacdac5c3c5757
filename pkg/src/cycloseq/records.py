"""Measure records, deterministic serialization, and the JSONL result cache."""

from __future__ import annotations

import hashlib
import json
import sys
from dataclasses import asdict, dataclass
from datetime import datetime, timezone
from pathlib import Path

TOOLKIT_VERSION = "0.1.0"


def _canonical(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


@dataclass
class MeasureRecord:
    sequence_label: str
    measure: str  # Ck | autocorr | lc_profile | moc_profile | two_adic | charsum | bound_check
    params: dict
    value: object
    witness: dict | None = None
    kernel_values: dict | None = None
    timestamp: str = ""
    toolkit_version: str = TOOLKIT_VERSION

    def __post_init__(self):
        if not self.timestamp:
            self.timestamp = datetime.now(timezone.utc).isoformat()

    @property
    def cache_key(self) -> str:
        payload = _canonical(
            {"label": self.sequence_label, "measure": self.measure, "params": self.params}
        )
        return hashlib.sha256(payload.encode()).hexdigest()

    def to_dict(self) -> dict:
        d = asdict(self)
        d["cache_key"] = self.cache_key
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "MeasureRecord":
        d = {k: v for k, v in d.items() if k != "cache_key"}
        return cls(**d)

    def to_json(self) -> str:
        return _canonical(self.to_dict())

    def write(self, stream=None, fmt: str = "json") -> None:
        stream = stream or sys.stdout
        if fmt == "json":
            stream.write(self.to_json() + "\n")
        elif fmt == "csv":
            import csv

            w = csv.writer(stream)
            base = [self.sequence_label, self.measure, _canonical(self.params)]
            tail = [
                _canonical(self.witness) if self.witness else "",
                _canonical(self.kernel_values) if self.kernel_values else "",
                self.timestamp,
                self.toolkit_version,
            ]
            header = [
                "sequence_label",
                "measure",
                "params",
                "key",
                "value",
                "witness",
                "kernel_values",
                "timestamp",
                "toolkit_version",
            ]
            w.writerow(header)
            if isinstance(self.value, dict):
                for key, val in self.value.items():
                    w.writerow(base + [key, _json_cell(val)] + tail)
            else:
                w.writerow(base + ["", _json_cell(self.value)] + tail)
        else:
            raise ValueError(f"unknown format {fmt!r}")


def _json_cell(v) -> str:
    if isinstance(v, (int, float, str)):
        return str(v)
    return _canonical(v)


class RecordCache:
    """Append-friendly JSONL store keyed by record content hash."""

    def __init__(self, path):
        self.path = Path(path)

    def load(self) -> dict[str, dict]:
        out: dict[str, dict] = {}
        if not self.path.exists():
            return out
        for line in self.path.read_text().splitlines():
            line = line.strip()
            if not line:
                continue
            try:
                d = json.loads(line)
            except json.JSONDecodeError:
                continue
            key = d.get("cache_key")
            if key:
                out[key] = d
        return out

    def get(self, key: str) -> dict | None:
        return self.load().get(key)

    def append(self, record: MeasureRecord) -> None:
        self.path.parent.mkdir(parents=True, exist_ok=True)
        with open(self.path, "a") as f:
            try:
                import fcntl

                fcntl.flock(f, fcntl.LOCK_EX)
            except ImportError:
                pass
            f.write(record.to_json() + "\n")
