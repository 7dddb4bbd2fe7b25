"""Rule-and-lexicon part-of-speech tagger over a fixed nine-tag set.

Closed-class words come from a bundled lexicon; open-class words fall to
suffix rules, then to noun. Pure-digit tokens tag as "other". The tagger is
deterministic and needs no trained model.
"""

from __future__ import annotations

from .textproc import words

TAGS = (
    "noun",
    "verb",
    "adjective",
    "adverb",
    "pronoun",
    "determiner",
    "preposition",
    "interjection",
    "other",
)

_SUFFIX_RULES: tuple[tuple[str, str], ...] = (
    ("ly", "adverb"),
    ("ing", "verb"),
    ("ed", "verb"),
    ("ize", "verb"),
    ("ise", "verb"),
    ("ify", "verb"),
    ("ous", "adjective"),
    ("ful", "adjective"),
    ("ive", "adjective"),
    ("able", "adjective"),
    ("ible", "adjective"),
    ("ic", "adjective"),
    ("less", "adjective"),
    ("ish", "adjective"),
    ("tion", "noun"),
    ("sion", "noun"),
    ("ment", "noun"),
    ("ness", "noun"),
    ("ity", "noun"),
    ("ism", "noun"),
    ("ist", "noun"),
    ("ship", "noun"),
    ("hood", "noun"),
)


def tag_word(word: str, closed_class: dict[str, str]) -> str:
    if word.isdigit():
        return "other"
    tag = closed_class.get(word)
    if tag is not None:
        return tag
    # suffix rules need a stem left over, hence the length guard
    for suffix, guess in _SUFFIX_RULES:
        if word.endswith(suffix) and len(word) > len(suffix) + 1:
            return guess
    return "noun"


def tag_text(text: str, closed_class: dict[str, str]) -> list[tuple[str, str]]:
    return [(w, tag_word(w, closed_class)) for w in words(text)]


def tag_fractions(text: str, closed_class: dict[str, str]) -> dict[str, float]:
    """Fraction of tokens carrying each tag; all zeros for empty text."""
    counts = dict.fromkeys(TAGS, 0)
    total = 0
    for _, tag in tag_text(text, closed_class):
        counts[tag] += 1
        total += 1
    if total == 0:
        return {tag: 0.0 for tag in TAGS}
    return {tag: counts[tag] / total for tag in TAGS}
