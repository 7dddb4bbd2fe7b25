from __future__ import annotations

import json

import httpx
import pytest

from botscope.errors import MissingFile, NotFound, ParseError, UpstreamError
from botscope.ingest import (
    BOT_LABEL,
    HUMAN_LABEL,
    FixtureSource,
    HttpSource,
    corpus_digest,
    fetch_account,
    load_corpus,
    save_corpus,
)
from botscope.snapshot import snapshot_to_document

from .test_snapshot import make_doc

FIXTURES = "tests/fixtures"


def test_save_load_roundtrip(tmp_path, small_corpus):
    save_corpus(small_corpus, tmp_path)
    loaded = load_corpus(tmp_path)
    assert loaded.digest == small_corpus.digest
    assert loaded.counts == small_corpus.counts
    assert loaded.items == small_corpus.items


def test_counts(small_corpus):
    bots, humans = small_corpus.counts
    assert bots == 30
    assert humans == 30
    labels = [lab for _, lab in small_corpus.items]
    assert labels == [BOT_LABEL] * 30 + [HUMAN_LABEL] * 30


def test_digest_tracks_content(tmp_path, small_corpus):
    save_corpus(small_corpus, tmp_path)
    before = load_corpus(tmp_path).digest
    blob = (tmp_path / "bots.jsonl").read_bytes()
    (tmp_path / "bots.jsonl").write_bytes(blob.replace(b"acct00000", b"acct99999", 1))
    assert load_corpus(tmp_path).digest != before


def test_digest_separates_files():
    # same bytes on the other side of the file boundary must not collide
    a = corpus_digest(b"x\n", b"")
    b = corpus_digest(b"", b"x\n")
    assert a != b


def test_missing_file(tmp_path):
    (tmp_path / "bots.jsonl").write_text("")
    with pytest.raises(MissingFile):
        load_corpus(tmp_path)


def test_parse_error_names_file_and_line(tmp_path, small_corpus):
    save_corpus(small_corpus, tmp_path)
    with open(tmp_path / "humans.jsonl", "a", encoding="utf-8") as fh:
        fh.write("{broken\n")
    with pytest.raises(ParseError, match=r"humans\.jsonl:31"):
        load_corpus(tmp_path)


def test_blank_lines_skipped(tmp_path):
    doc = json.dumps(make_doc())
    (tmp_path / "bots.jsonl").write_text(doc + "\n\n", encoding="utf-8")
    (tmp_path / "humans.jsonl").write_text("", encoding="utf-8")
    corpus = load_corpus(tmp_path)
    assert corpus.counts == (1, 0)


def test_fixture_source_fetch():
    source = FixtureSource(FIXTURES)
    snap = source.fetch("alice")
    assert snap.user.screen_name == "alice"
    assert source.kind == "fixture"


def test_fixture_source_not_found():
    with pytest.raises(NotFound):
        FixtureSource(FIXTURES).fetch("nobody")


def _mock_source(handler, **kwargs) -> HttpSource:
    return HttpSource("https://upstream.test", transport=httpx.MockTransport(handler), **kwargs)


def test_http_source_fetch(alice_snapshot):
    doc = snapshot_to_document(alice_snapshot)

    def handler(request: httpx.Request) -> httpx.Response:
        assert request.url.path == "/accounts/alice"
        return httpx.Response(200, json=doc)

    snap = _mock_source(handler).fetch("alice")
    assert snap == alice_snapshot


def test_http_source_404_is_not_found():
    def handler(request):
        return httpx.Response(404, json={"error": "nope"})

    with pytest.raises(NotFound):
        _mock_source(handler).fetch("ghost")


def test_http_source_5xx_is_upstream_error():
    def handler(request):
        return httpx.Response(503, text="down")

    with pytest.raises(UpstreamError):
        _mock_source(handler).fetch("alice")


def test_http_source_network_failure_is_upstream_error():
    def handler(request):
        raise httpx.ConnectError("refused")

    with pytest.raises(UpstreamError):
        _mock_source(handler).fetch("alice")


def test_http_source_bad_payload_is_parse_error():
    def handler(request):
        return httpx.Response(200, text="not json")

    with pytest.raises(ParseError):
        _mock_source(handler).fetch("alice")


def test_http_source_bearer_token(monkeypatch, alice_snapshot):
    monkeypatch.setenv("UPSTREAM_TOKEN", "sekret")
    seen = {}

    def handler(request):
        seen["auth"] = request.headers.get("authorization")
        return httpx.Response(200, json=snapshot_to_document(alice_snapshot))

    _mock_source(handler, token_env="UPSTREAM_TOKEN").fetch("alice")
    assert seen["auth"] == "Bearer sekret"


def test_http_source_no_token_no_header(alice_snapshot):
    seen = {}

    def handler(request):
        seen["auth"] = request.headers.get("authorization")
        return httpx.Response(200, json=snapshot_to_document(alice_snapshot))

    _mock_source(handler).fetch("alice")
    assert seen["auth"] is None


def test_fetch_account_dispatch(alice_snapshot):
    snap = fetch_account(FixtureSource(FIXTURES), "bob")
    assert snap.user.screen_name == "bob"
