"""Snapshot acquisition: fixture directory and HTTP backends, corpus files.

A corpus directory holds `bots.jsonl` and `humans.jsonl`, one snapshot
document per line; its digest is the content hash of those two files, so a
corpus loaded from disk and the corpus that produced the files agree.
"""

from __future__ import annotations

import hashlib
import threading
from dataclasses import dataclass
from pathlib import Path

import httpx

from .errors import MissingFile, NotFound, ParseError, SchemaError, UpstreamError
from .snapshot import AccountSnapshot, parse_snapshot, serialize_snapshot

BOT_LABEL = 1
HUMAN_LABEL = 0


@dataclass(frozen=True)
class LabeledCorpus:
    items: tuple[tuple[AccountSnapshot, int], ...]
    digest: str

    @property
    def counts(self) -> tuple[int, int]:
        bots = sum(1 for _, label in self.items if label == BOT_LABEL)
        return bots, len(self.items) - bots


def corpus_digest(bots_payload: bytes, humans_payload: bytes) -> str:
    h = hashlib.sha256()
    h.update(b"bots.jsonl\n")
    h.update(bots_payload)
    h.update(b"humans.jsonl\n")
    h.update(humans_payload)
    return h.hexdigest()


def _snapshot_lines(corpus: LabeledCorpus, label: int) -> bytes:
    lines = [serialize_snapshot(s) for s, lab in corpus.items if lab == label]
    return ("\n".join(lines) + "\n").encode("utf-8") if lines else b""


def save_corpus(corpus: LabeledCorpus, out_dir: str | Path) -> Path:
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    (out / "bots.jsonl").write_bytes(_snapshot_lines(corpus, BOT_LABEL))
    (out / "humans.jsonl").write_bytes(_snapshot_lines(corpus, HUMAN_LABEL))
    return out


def _load_lines(path: Path, label: int) -> list[tuple[AccountSnapshot, int]]:
    items = []
    for lineno, line in enumerate(path.read_text(encoding="utf-8").splitlines(), start=1):
        if not line.strip():
            continue
        try:
            items.append((parse_snapshot(line), label))
        except (ParseError, SchemaError) as exc:
            raise ParseError(f"{path.name}:{lineno}: {exc}") from None
    return items


def load_corpus(path: str | Path) -> LabeledCorpus:
    root = Path(path)
    bots_file = root / "bots.jsonl"
    humans_file = root / "humans.jsonl"
    for f in (bots_file, humans_file):
        if not f.exists():
            raise MissingFile(f"corpus file not found: {f}")
    items = _load_lines(bots_file, BOT_LABEL) + _load_lines(humans_file, HUMAN_LABEL)
    digest = corpus_digest(bots_file.read_bytes(), humans_file.read_bytes())
    return LabeledCorpus(items=tuple(items), digest=digest)


class FixtureSource:
    """Reads `<root>/<screen_name>.json` snapshot documents."""

    kind = "fixture"

    def __init__(self, root: str | Path):
        self.root = Path(root)

    def fetch(self, screen_name: str) -> AccountSnapshot:
        path = self.root / f"{screen_name}.json"
        if not path.exists():
            raise NotFound(f"no snapshot for {screen_name!r}")
        return parse_snapshot(path.read_text(encoding="utf-8"))


class HttpSource:
    """GET `<base>/accounts/<screen_name>`, expecting the snapshot schema.

    An optional bearer token is read from the environment variable named by
    token_env; concurrent fetches are capped by max_concurrent.
    """

    kind = "http"

    def __init__(self, base_url: str, token_env: str | None = None,
                 timeout: float = 10.0, max_concurrent: int = 8, transport=None):
        self.base_url = base_url.rstrip("/")
        self.token_env = token_env
        self.timeout = timeout
        self._gate = threading.BoundedSemaphore(max_concurrent)
        self._client = httpx.Client(timeout=timeout, transport=transport)

    def _headers(self) -> dict[str, str]:
        if not self.token_env:
            return {}
        import os

        token = os.environ.get(self.token_env, "")
        return {"Authorization": f"Bearer {token}"} if token else {}

    def fetch(self, screen_name: str) -> AccountSnapshot:
        url = f"{self.base_url}/accounts/{screen_name}"
        with self._gate:
            try:
                response = self._client.get(url, headers=self._headers())
            except httpx.HTTPError as exc:
                raise UpstreamError(f"fetch of {url} failed: {exc}") from None
        if response.status_code == 404:
            raise NotFound(f"no snapshot for {screen_name!r}")
        if not 200 <= response.status_code < 300:
            raise UpstreamError(f"{url} returned {response.status_code}")
        return parse_snapshot(response.text)


def fetch_account(source, screen_name: str) -> AccountSnapshot:
    """Fetch one account's snapshot; caps are enforced during parsing."""
    return source.fetch(screen_name)
