from __future__ import annotations

from pathlib import Path

import numpy as np
import pytest

from botscope.features import build_registry, extract_matrix
from botscope.forest import ForestParams, train_suite
from botscope.lexicons import load_default_lexicons
from botscope.snapshot import parse_snapshot
from botscope.synth import SynthParams, generate_corpus

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def registry():
    return build_registry()


@pytest.fixture(scope="session")
def lexicons():
    return load_default_lexicons()


@pytest.fixture(scope="session")
def small_corpus():
    return generate_corpus(SynthParams(seed=7, n_bots=30, n_humans=30))


@pytest.fixture(scope="session")
def labeled_matrix(small_corpus, registry):
    snapshots = [snap for snap, _ in small_corpus.items]
    y = np.array([label for _, label in small_corpus.items], dtype=np.int8)
    return extract_matrix(snapshots, registry), y


@pytest.fixture(scope="session")
def small_suite(labeled_matrix, small_corpus, registry):
    X, y = labeled_matrix
    return train_suite(X, y, ForestParams(n_trees=30, rng_seed=1), registry,
                       dataset_digest=small_corpus.digest)


@pytest.fixture(scope="session")
def alice_snapshot():
    return parse_snapshot((FIXTURES / "alice.json").read_text(encoding="utf-8"))


@pytest.fixture(scope="session")
def bob_snapshot():
    return parse_snapshot((FIXTURES / "bob.json").read_text(encoding="utf-8"))
