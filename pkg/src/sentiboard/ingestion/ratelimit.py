"""Fixed-window rate limiter guarding the upstream API."""

from __future__ import annotations

import threading
import time
from dataclasses import dataclass

DEFAULT_CAPACITY = 450
DEFAULT_WINDOW = 900.0


@dataclass(frozen=True)
class PermitDecision:
    granted: bool
    retry_after: float = 0.0

    def __bool__(self) -> bool:
        return self.granted


class WindowRateLimiter:
    """Grants up to `capacity` permits per `window` seconds.

    The window starts at the first grant after a rollover and resets
    exactly at window_start + window. Safe under concurrent callers;
    acquisition is atomic, so capacity can never be exceeded.
    """

    def __init__(self, capacity: int = DEFAULT_CAPACITY, window: float = DEFAULT_WINDOW):
        if capacity < 1 or window <= 0:
            raise ValueError("capacity must be >= 1 and window > 0")
        self.capacity = capacity
        self.window = window
        self._consumed = 0
        self._window_start: float | None = None
        self._lock = threading.Lock()

    def acquire(self, now: float | None = None) -> PermitDecision:
        if now is None:
            now = time.monotonic()
        with self._lock:
            if self._window_start is None or now >= self._window_start + self.window:
                self._window_start = now
                self._consumed = 0
            if self._consumed < self.capacity:
                self._consumed += 1
                return PermitDecision(granted=True)
            return PermitDecision(granted=False,
                                  retry_after=self._window_start + self.window - now)

    @property
    def consumed(self) -> int:
        with self._lock:
            return self._consumed
