"""Append-only audit trail: one record per handled request.

Records carry no post text and no secrets. A failing sink never fails
the request (availability over auditability); failures are counted and
surfaced on the health endpoint.
"""

from __future__ import annotations

import json
import os
import threading
from dataclasses import asdict, dataclass
from datetime import datetime, timezone
from pathlib import Path


@dataclass(frozen=True)
class AuditRecord:
    timestamp: str
    token_id: str
    endpoint: str
    query_digest: str | None
    result_count: int | None
    status: int
    latency_ms: int


def utc_now() -> str:
    return datetime.now(timezone.utc).strftime("%Y-%m-%dT%H:%M:%S.%fZ")


class AuditLog:
    """JSONL file sink; falls back to an in-memory ring for tests/dev."""

    def __init__(self, path: str | Path | None = None, keep_in_memory: bool = True):
        self.path = Path(path) if path else None
        self.failures = 0
        self.written = 0
        self._lock = threading.Lock()
        self._memory: list[AuditRecord] | None = [] if (keep_in_memory or not path) else None

    def append(self, record: AuditRecord) -> None:
        line = json.dumps(asdict(record), separators=(",", ":"), sort_keys=True)
        with self._lock:
            if self._memory is not None:
                self._memory.append(record)
            if self.path is not None:
                try:
                    with open(self.path, "a", encoding="utf-8") as f:
                        f.write(line + "\n")
                        f.flush()
                        os.fsync(f.fileno())
                except OSError:
                    self.failures += 1
                    return
            self.written += 1

    @property
    def records(self) -> list[AuditRecord]:
        with self._lock:
            return list(self._memory or [])
