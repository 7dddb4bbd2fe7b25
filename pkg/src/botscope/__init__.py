"""botscope: behavioral bot-likelihood scoring for social-media accounts.

Pipeline: account snapshot -> six classes of behavioral features -> a
seven-model random-forest suite -> scores in [0, 1], served over HTTP with
persisted results and a fixed-window rate limit.
"""

from __future__ import annotations

__version__ = "0.1.0"

from .errors import BotscopeError
from .features import CLASS_ORDER, build_registry, extract_all, extract_matrix
from .forest import (
    ForestParams,
    ScoreSuite,
    load_suite,
    save_suite,
    score_suite,
    train_suite,
)
from .ingest import BOT_LABEL, HUMAN_LABEL, load_corpus, save_corpus
from .snapshot import AccountSnapshot, parse_snapshot, snapshot_from_document

__all__ = [
    "__version__",
    "BotscopeError",
    "CLASS_ORDER",
    "build_registry",
    "extract_all",
    "extract_matrix",
    "ForestParams",
    "ScoreSuite",
    "load_suite",
    "save_suite",
    "score_suite",
    "train_suite",
    "BOT_LABEL",
    "HUMAN_LABEL",
    "load_corpus",
    "save_corpus",
    "AccountSnapshot",
    "parse_snapshot",
    "snapshot_from_document",
]
