"""Per-key fixed-window rate limiting.

Each key's 900-second window is anchored at its first request; the window
resets (new anchor) once it elapses. The clock is an explicit argument so
behavior is testable without sleeping.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass

DEFAULT_LIMIT = 180
DEFAULT_WINDOW_SECONDS = 900.0


@dataclass(frozen=True)
class RateDecision:
    allowed: bool
    limit: int
    remaining: int
    reset_at: float

    def retry_after(self, now: float) -> int:
        """Whole seconds until the window resets, at least 1."""
        return max(1, math.ceil(self.reset_at - now))


class FixedWindowLimiter:
    def __init__(self, limit: int = DEFAULT_LIMIT, window_seconds: float = DEFAULT_WINDOW_SECONDS):
        if limit < 1:
            raise ValueError(f"limit must be >= 1, got {limit}")
        if window_seconds <= 0:
            raise ValueError(f"window must be positive, got {window_seconds}")
        self.limit = limit
        self.window_seconds = window_seconds
        self._lock = threading.Lock()
        self._windows: dict[str, tuple[float, int]] = {}  # key -> (window start, count)

    def allow(self, key: str, now: float) -> RateDecision:
        """Admit or refuse one request for `key` at time `now`."""
        with self._lock:
            start, count = self._windows.get(key, (now, 0))
            if now - start >= self.window_seconds:
                start, count = now, 0
            if count < self.limit:
                count += 1
                self._windows[key] = (start, count)
                return RateDecision(
                    allowed=True,
                    limit=self.limit,
                    remaining=self.limit - count,
                    reset_at=start + self.window_seconds,
                )
            self._windows[key] = (start, count)
            return RateDecision(
                allowed=False,
                limit=self.limit,
                remaining=0,
                reset_at=start + self.window_seconds,
            )

    def reset(self, key: str | None = None) -> None:
        with self._lock:
            if key is None:
                self._windows.clear()
            else:
                self._windows.pop(key, None)
