"""Pure-numpy split search, the fallback when the compiled kernel is absent.

Arithmetic mirrors the compiled kernel operation-for-operation: counts are
exact integers in float64, each quality score is (posL^2 + negL^2)/nL +
(posR^2 + negR^2)/nR, and the first maximum in (column, position) order wins.
The two backends therefore produce bit-identical splits.
"""

from __future__ import annotations

import numpy as np

BACKEND_NAME = "pure"


def best_split(X: np.ndarray, y: np.ndarray, min_leaf: int):
    """Best split over candidate columns.

    X: (n, k) float64, one column per candidate feature, no NaN.
    y: (n,) integer 0/1 labels.
    Returns (column, threshold, quality, n_left) or None when no position
    separates two distinct values under the min_leaf bounds.
    """
    n, k = X.shape
    if n < 2 or k == 0:
        return None

    order = np.argsort(X, axis=0, kind="stable")
    xs = np.take_along_axis(X, order, axis=0)
    ys = y.astype(np.float64)[order]

    pos_left = np.cumsum(ys, axis=0)[:-1]
    n_left = np.arange(1, n, dtype=np.float64)[:, None]
    neg_left = n_left - pos_left
    total_pos = float(y.sum())
    pos_right = total_pos - pos_left
    n_right = float(n) - n_left
    neg_right = n_right - pos_right

    g = (pos_left * pos_left + neg_left * neg_left) / n_left \
        + (pos_right * pos_right + neg_right * neg_right) / n_right

    valid = (xs[:-1] < xs[1:]) & (n_left >= min_leaf) & (n_right >= min_leaf)
    if not valid.any():
        return None
    g = np.where(valid, g, -np.inf)

    # first maximum scanning columns outer, positions inner: lowest feature
    # index wins ties, then lowest threshold
    flat = int(np.argmax(g.T))
    col, i = divmod(flat, n - 1)
    if not valid[i, col]:
        return None

    a = float(xs[i, col])
    b = float(xs[i + 1, col])
    thr = (a + b) / 2.0
    if thr >= b:
        thr = a
    return col, thr, float(g[i, col]), i + 1
