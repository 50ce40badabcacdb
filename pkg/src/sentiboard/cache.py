"""TTL-bounded result cache keyed by canonical query digest.

One completed analysis (the classified post list) is cached per
(query, algorithm); every widget of a search derives from that single
entry, which is what keeps widgets mutually consistent within the TTL
and spares the upstream API.
"""

from __future__ import annotations

import hashlib
import json
import threading
import time
from collections import OrderedDict
from dataclasses import dataclass
from typing import Any

from .ingestion.query import Query
from .models import format_timestamp

DEFAULT_TTL = 60.0
DEFAULT_CAPACITY = 1024


def cache_key(query: Query, algorithm: str | None = None) -> str:
    """Digest of the canonical query serialization.

    Term order never matters; the clamp flag is excluded, so a clamped
    query and an explicit query for the hard limit share an entry.
    """
    canonical = {
        "algorithm": algorithm or query.algorithm,
        "language": query.language,
        "max_results": query.max_results,
        "origin": query.origin,
        "terms": sorted(f"{t.kind}:{t.value.lower()}" for t in query.terms),
        "time_from": format_timestamp(query.time_from) if query.time_from else None,
        "time_to": format_timestamp(query.time_to) if query.time_to else None,
    }
    payload = json.dumps(canonical, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(payload.encode("utf-8")).hexdigest()


@dataclass
class _Entry:
    value: Any
    stored_at: float
    ttl: float


class _Miss:
    def __repr__(self) -> str:
        return "MISS"

    def __bool__(self) -> bool:
        return False


MISS = _Miss()


class ResultCache:
    """In-process store with per-entry TTL and a hard capacity bound.

    An entry expires exactly at stored_at + ttl (the expiry instant is a
    miss). When full, the least-recently-stored entry is evicted; puts
    never fail. Safe under concurrent callers.
    """

    def __init__(self, ttl: float = DEFAULT_TTL, capacity: int = DEFAULT_CAPACITY):
        if ttl <= 0 or capacity < 1:
            raise ValueError("ttl must be positive and capacity >= 1")
        self.ttl = ttl
        self.capacity = capacity
        self._entries: OrderedDict[str, _Entry] = OrderedDict()
        self._lock = threading.Lock()
        self.hits = 0
        self.misses = 0

    def get(self, key: str, now: float | None = None):
        """Return the cached value, or the MISS sentinel."""
        if now is None:
            now = time.monotonic()
        with self._lock:
            entry = self._entries.get(key)
            if entry is None or now >= entry.stored_at + entry.ttl:
                if entry is not None:
                    del self._entries[key]
                self.misses += 1
                return MISS
            self.hits += 1
            return entry.value

    def put(self, key: str, value: Any, now: float | None = None,
            ttl: float | None = None) -> None:
        if now is None:
            now = time.monotonic()
        with self._lock:
            self._entries[key] = _Entry(value=value, stored_at=now, ttl=ttl or self.ttl)
            self._entries.move_to_end(key)  # re-put refreshes storage order
            while len(self._entries) > self.capacity:
                self._entries.popitem(last=False)

    def __len__(self) -> int:
        with self._lock:
            return len(self._entries)
