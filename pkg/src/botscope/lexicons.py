"""Bundled lexicon loading: closed-class tags, word affect scores, emoticons.

All lexicons are tab-separated text with '#' comment lines, shipped under
botscope/data. Loaders validate shape and ranges and raise LexiconError on
malformed rows, so a bad data file fails at load time rather than mid-score.
"""

from __future__ import annotations

import re
from functools import lru_cache
from importlib import resources
from pathlib import Path

from .errors import LexiconError
from .pos import TAGS


def _rows(path: Path) -> list[tuple[int, list[str]]]:
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise LexiconError(f"cannot read lexicon {path}: {exc}") from None
    out = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        out.append((lineno, line.split("\t")))
    return out


def _parse_score(field: str, path: Path, lineno: int, lo: float, hi: float) -> float:
    try:
        value = float(field)
    except ValueError:
        raise LexiconError(f"{path}:{lineno}: not a number: {field!r}") from None
    if not lo <= value <= hi:
        raise LexiconError(f"{path}:{lineno}: score {value} outside [{lo}, {hi}]")
    return value


def load_closed_class(path: Path) -> dict[str, str]:
    lexicon: dict[str, str] = {}
    for lineno, fields in _rows(path):
        if len(fields) != 2:
            raise LexiconError(f"{path}:{lineno}: expected 'word<TAB>tag'")
        word, tag = fields[0].strip().lower(), fields[1].strip()
        if tag not in TAGS:
            raise LexiconError(f"{path}:{lineno}: unknown tag {tag!r}")
        lexicon[word] = tag
    return lexicon


def load_happiness(path: Path) -> dict[str, float]:
    """word -> happiness score on a 1..9 scale."""
    lexicon: dict[str, float] = {}
    for lineno, fields in _rows(path):
        if len(fields) != 2:
            raise LexiconError(f"{path}:{lineno}: expected 'word<TAB>score'")
        lexicon[fields[0].strip().lower()] = _parse_score(fields[1], path, lineno, 1.0, 9.0)
    return lexicon


def load_vad(path: Path) -> dict[str, tuple[float, float, float]]:
    """word -> (valence, arousal, dominance), each in [0, 1]."""
    lexicon: dict[str, tuple[float, float, float]] = {}
    for lineno, fields in _rows(path):
        if len(fields) != 4:
            raise LexiconError(f"{path}:{lineno}: expected 'word<TAB>v<TAB>a<TAB>d'")
        v, a, d = (_parse_score(f, path, lineno, 0.0, 1.0) for f in fields[1:])
        lexicon[fields[0].strip().lower()] = (v, a, d)
    return lexicon


def load_emoticons(path: Path) -> dict[str, int]:
    """emoticon -> polarity, +1 or -1."""
    lexicon: dict[str, int] = {}
    for lineno, fields in _rows(path):
        if len(fields) != 2:
            raise LexiconError(f"{path}:{lineno}: expected 'emoticon<TAB>polarity'")
        raw = fields[1].strip()
        if raw not in ("1", "+1", "-1"):
            raise LexiconError(f"{path}:{lineno}: polarity must be +1 or -1, got {raw!r}")
        lexicon[fields[0]] = 1 if raw in ("1", "+1") else -1
    return lexicon


def data_path(name: str) -> Path:
    return Path(str(resources.files("botscope").joinpath("data", name)))


class Lexicons:
    """All bundled lexicons plus a compiled emoticon matcher."""

    def __init__(
        self,
        closed_class: dict[str, str],
        happiness: dict[str, float],
        vad: dict[str, tuple[float, float, float]],
        emoticons: dict[str, int],
    ):
        self.closed_class = closed_class
        self.happiness = happiness
        self.vad = vad
        self.emoticons = emoticons
        # longest-first alternation so ":-(" wins over ":-"-free ":("
        ordered = sorted(emoticons, key=len, reverse=True)
        self.emoticon_re = re.compile("|".join(re.escape(e) for e in ordered)) if ordered else None

    def find_emoticons(self, text: str) -> list[int]:
        """Polarities of emoticons in the text, left to right."""
        if self.emoticon_re is None:
            return []
        return [self.emoticons[m.group(0)] for m in self.emoticon_re.finditer(text)]


@lru_cache(maxsize=1)
def load_default_lexicons() -> Lexicons:
    return Lexicons(
        closed_class=load_closed_class(data_path("closed_class.tsv")),
        happiness=load_happiness(data_path("happiness.tsv")),
        vad=load_vad(data_path("vad.tsv")),
        emoticons=load_emoticons(data_path("emoticons.tsv")),
    )
