"""Tokenization helpers shared by the content and sentiment features.

URLs, @mentions, and #hashtags are stripped from the token stream; they are
counted through their own structured fields, never as words.
"""

from __future__ import annotations

import re

_URL_RE = re.compile(r"(?:https?://|www\.)\S+", re.IGNORECASE)
_MARKER_RE = re.compile(r"[#@]\w+")
_WORD_RE = re.compile(r"[^\W\d_][\w'-]*|\d+")


def strip_urls(text: str) -> str:
    return _URL_RE.sub(" ", text)


def words(text: str) -> list[str]:
    """Lowercase word tokens; URLs, #tags, and @handles removed."""
    cleaned = _MARKER_RE.sub(" ", strip_urls(text)).lower()
    return _WORD_RE.findall(cleaned)


def word_count(text: str) -> int:
    return len(words(text))
