"""CART growth and prediction over flattened tree arrays.

Trees are grown with an explicit stack in preorder (left subtree before
right), drawing candidate features at each expanded node, so a tree is fully
determined by (data, params, per-tree RNG) regardless of split backend.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import EmptyNode
from . import backend as backend_mod


def gini_impurity(pos: int, neg: int) -> float:
    """1 - p_pos^2 - p_neg^2 over a two-class node."""
    total = pos + neg
    if total == 0:
        raise EmptyNode("gini impurity of an empty node is undefined")
    p_pos = pos / total
    p_neg = neg / total
    return 1.0 - p_pos * p_pos - p_neg * p_neg


def split_quality_parent(pos: int, neg: int) -> float:
    """Parent-side term of the split quality score; see best_split."""
    n = pos + neg
    return float(pos * pos + neg * neg) / n


def best_split(X: np.ndarray, y: np.ndarray, candidates, min_leaf: int = 1, kernel=None):
    """Best (feature, threshold, impurity decrease) over the candidate features.

    Scans every midpoint between consecutive distinct sorted values of each
    candidate column; maximizes the weighted Gini decrease with deterministic
    ties to the lowest feature index, then the lowest threshold. Returns None
    when no split strictly decreases impurity.
    """
    kernel = kernel or backend_mod.get()
    cands = np.asarray(sorted(candidates), dtype=np.intp)
    Xc = np.ascontiguousarray(X[:, cands], dtype=np.float64)
    yc = np.ascontiguousarray(y, dtype=np.int8)
    found = kernel.best_split(Xc, yc, min_leaf)
    if found is None:
        return None
    col, thr, g, _ = found
    n = len(y)
    pos = int(yc.sum())
    g_parent = split_quality_parent(pos, n - pos)
    if not g > g_parent:
        return None
    decrease = (g - g_parent) / n
    return int(cands[col]), float(thr), float(decrease)


@dataclass(frozen=True)
class Tree:
    """Flattened binary tree; feature == -1 marks a leaf."""

    feature: np.ndarray    # int32
    threshold: np.ndarray  # float64
    left: np.ndarray       # int32
    right: np.ndarray      # int32
    value: np.ndarray      # float64, leaf positive fraction
    count: np.ndarray      # int32, node sample count

    @property
    def n_nodes(self) -> int:
        return len(self.feature)

    def predict(self, X: np.ndarray) -> np.ndarray:
        """Leaf positive-fractions for imputed rows, traversed level-wise."""
        m = X.shape[0]
        node = np.zeros(m, dtype=np.int64)
        rows = np.arange(m)
        while True:
            feat = self.feature[node]
            active = feat >= 0
            if not active.any():
                return self.value[node]
            lookup = np.where(active, feat, 0)
            go_left = X[rows, lookup] <= self.threshold[node]
            child = np.where(go_left, self.left[node], self.right[node])
            node = np.where(active, child, node)


def grow_tree(
    X: np.ndarray,
    y: np.ndarray,
    rng: np.random.Generator,
    max_features: int,
    min_samples_leaf: int = 1,
    max_depth: int | None = None,
    kernel=None,
) -> Tree:
    """Grow one CART tree on (X, y); X must be imputed (no NaN)."""
    kernel = kernel or backend_mod.get()
    n, d = X.shape
    k = min(max_features, d)

    feature: list[int] = []
    threshold: list[float] = []
    left: list[int] = []
    right: list[int] = []
    value: list[float] = []
    count: list[int] = []

    def new_node() -> int:
        feature.append(-1)
        threshold.append(0.0)
        left.append(-1)
        right.append(-1)
        value.append(0.0)
        count.append(0)
        return len(feature) - 1

    # stack entries: (sample indices, depth, parent node id, is-left-child)
    stack: list[tuple[np.ndarray, int, int, bool]] = [(np.arange(n), 0, -1, False)]
    while stack:
        idx, depth, parent, is_left = stack.pop()
        node = new_node()
        if parent >= 0:
            if is_left:
                left[parent] = node
            else:
                right[parent] = node

        y_node = y[idx]
        n_node = len(idx)
        pos = int(y_node.sum())
        count[node] = n_node
        value[node] = pos / n_node

        if pos in (0, n_node) or n_node < 2 * min_samples_leaf \
                or (max_depth is not None and depth >= max_depth):
            continue

        cands = np.sort(rng.choice(d, size=k, replace=False))
        found = kernel.best_split(
            np.ascontiguousarray(X[np.ix_(idx, cands)]),
            np.ascontiguousarray(y_node, dtype=np.int8),
            min_samples_leaf,
        )
        if found is None:
            continue
        col, thr, g, _ = found
        if not g > split_quality_parent(pos, n_node - pos):
            continue

        feat = int(cands[col])
        feature[node] = feat
        threshold[node] = thr
        mask = X[idx, feat] <= thr
        # right pushed first so the left child is expanded (and numbered) first
        stack.append((idx[~mask], depth + 1, node, False))
        stack.append((idx[mask], depth + 1, node, True))

    return Tree(
        feature=np.array(feature, dtype=np.int32),
        threshold=np.array(threshold, dtype=np.float64),
        left=np.array(left, dtype=np.int32),
        right=np.array(right, dtype=np.int32),
        value=np.array(value, dtype=np.float64),
        count=np.array(count, dtype=np.int32),
    )
