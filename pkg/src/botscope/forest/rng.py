"""Counter-based per-tree randomness.

Each tree draws from its own Philox stream keyed by (seed, tree index), so
any tree's bootstrap sample can be regenerated independently (used for
out-of-bag evaluation) and training order never affects results.
"""

from __future__ import annotations

import numpy as np


def tree_rng(seed: int, tree_index: int) -> np.random.Generator:
    key = np.array([np.uint64(seed & 0xFFFFFFFFFFFFFFFF), np.uint64(tree_index)], dtype=np.uint64)
    return np.random.Generator(np.random.Philox(key=key))


def bootstrap_indices(seed: int, tree_index: int, n: int) -> np.ndarray:
    """The bootstrap sample a given tree used, regenerated from its key."""
    return tree_rng(seed, tree_index).integers(0, n, size=n)
