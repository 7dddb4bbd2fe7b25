"""Durable score storage: append-only log with an in-memory latest-index.

Log layout: 5-byte header (magic + version), then length-prefixed records,
each `u32 length | u32 CRC32 | JSON payload`. A torn tail (partial header,
short payload, or checksum mismatch) is discarded on open, so the store
always reopens to exactly the acknowledged prefix. One writer, many readers.

Entries hold only the scored account's key, its scores, the model digest,
and a timestamp; nothing about who requested the score is ever written.
"""

from __future__ import annotations

import json
import struct
import threading
import zlib
from bisect import bisect_right
from dataclasses import dataclass
from pathlib import Path

from .errors import EmptyStore, StorageError

MAGIC = b"BSLG"
VERSION = 1
_HEADER = struct.Struct(">II")  # record length, CRC32


@dataclass(frozen=True)
class StoreEntry:
    key: str
    scores: dict[str, float]
    model_digest: str
    timestamp: int


def normalize_key(screen_name: str) -> str:
    return screen_name.casefold()


class ScoreStore:
    def __init__(self, path: str | Path):
        self.path = Path(path)
        self._lock = threading.Lock()
        self._latest: dict[str, StoreEntry] = {}
        self._last_ts = 0
        try:
            valid_end = self._scan()
            self._fh = open(self.path, "r+b")
            self._fh.truncate(valid_end)
            self._fh.seek(valid_end)
        except OSError as exc:
            raise StorageError(f"cannot open score store {self.path}: {exc}") from None

    def _scan(self) -> int:
        """Replay the log into the index; returns the end of the valid prefix."""
        if not self.path.exists():
            self.path.write_bytes(MAGIC + bytes([VERSION]))
            return 5
        blob = self.path.read_bytes()
        if len(blob) < 5 or blob[:4] != MAGIC:
            raise StorageError(f"{self.path} is not a score log")
        if blob[4] != VERSION:
            raise StorageError(f"unsupported score log version {blob[4]}")
        offset = 5
        while True:
            header = blob[offset:offset + _HEADER.size]
            if len(header) < _HEADER.size:
                break
            length, crc = _HEADER.unpack(header)
            payload = blob[offset + _HEADER.size:offset + _HEADER.size + length]
            if len(payload) < length or zlib.crc32(payload) != crc:
                break
            self._apply(json.loads(payload.decode("utf-8")))
            offset += _HEADER.size + length
        return offset

    def _apply(self, doc: dict) -> None:
        entry = StoreEntry(
            key=doc["key"],
            scores={k: float(v) for k, v in doc["scores"].items()},
            model_digest=doc["model_digest"],
            timestamp=int(doc["timestamp"]),
        )
        self._latest[entry.key] = entry
        self._last_ts = max(self._last_ts, entry.timestamp)

    def record(self, screen_name: str, scores: dict[str, float], model_digest: str,
               timestamp: int) -> StoreEntry:
        """Durably append one result; later reads observe it immediately."""
        with self._lock:
            ts = max(int(timestamp), self._last_ts)  # monotone within this writer
            entry = StoreEntry(normalize_key(screen_name), dict(scores), model_digest, ts)
            payload = json.dumps({
                "key": entry.key,
                "scores": entry.scores,
                "model_digest": entry.model_digest,
                "timestamp": entry.timestamp,
            }, sort_keys=True, separators=(",", ":")).encode("utf-8")
            try:
                self._fh.write(_HEADER.pack(len(payload), zlib.crc32(payload)))
                self._fh.write(payload)
                self._fh.flush()
            except OSError as exc:
                raise StorageError(f"append to {self.path} failed: {exc}") from None
            self._latest[entry.key] = entry
            self._last_ts = entry.timestamp
            return entry

    def latest(self, screen_name: str) -> StoreEntry | None:
        return self._latest.get(normalize_key(screen_name))

    def entries(self) -> list[StoreEntry]:
        """Latest entry per account, sorted by key."""
        return [self._latest[k] for k in sorted(self._latest)]

    def unique_account_scores(self) -> dict[str, float]:
        return {k: e.scores["overall"] for k, e in self._latest.items()}

    @property
    def unique_accounts(self) -> int:
        return len(self._latest)

    def score_cdf(self, bins: int) -> list[tuple[float, float]]:
        """Empirical CDF of latest-per-account overall scores at bin edges.

        Points (i/bins, fraction of scores <= i/bins) for i = 0..bins;
        nondecreasing with final fraction 1.0.
        """
        if bins < 1:
            raise ValueError(f"bins must be >= 1, got {bins}")
        scores = sorted(self.unique_account_scores().values())
        if not scores:
            raise EmptyStore("no scores recorded yet")
        n = len(scores)
        points = []
        for i in range(bins + 1):
            edge = i / bins
            points.append((edge, bisect_right(scores, edge) / n))
        return points

    def compact(self) -> int:
        """Rewrite the log keeping only the latest record per account.

        Returns the number of surviving records. Atomic: the new log is
        written beside the old one and swapped in with rename.
        """
        with self._lock:
            tmp = self.path.with_suffix(self.path.suffix + ".compact")
            try:
                with open(tmp, "wb") as out:
                    out.write(MAGIC + bytes([VERSION]))
                    for entry in self.entries():
                        payload = json.dumps({
                            "key": entry.key,
                            "scores": entry.scores,
                            "model_digest": entry.model_digest,
                            "timestamp": entry.timestamp,
                        }, sort_keys=True, separators=(",", ":")).encode("utf-8")
                        out.write(_HEADER.pack(len(payload), zlib.crc32(payload)))
                        out.write(payload)
                    out.flush()
                self._fh.close()
                tmp.replace(self.path)
                self._fh = open(self.path, "ab")
            except OSError as exc:
                raise StorageError(f"compaction of {self.path} failed: {exc}") from None
            return len(self._latest)

    def close(self) -> None:
        self._fh.close()

    def __enter__(self):
        return self

    def __exit__(self, *exc):
        self.close()
