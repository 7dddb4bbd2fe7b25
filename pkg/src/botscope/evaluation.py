"""Stratified cross-validation and ROC/AUC scoring."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import SingleClassError, TooFewSamples
from .features import CLASS_ORDER, FeatureRegistry, build_registry
from .forest.model import ForestParams
from .forest.suite import train_suite


def _split_classes(labels) -> tuple[np.ndarray, np.ndarray]:
    y = np.asarray(labels)
    pos = np.flatnonzero(y == 1)
    neg = np.flatnonzero(y == 0)
    if len(pos) == 0 or len(neg) == 0:
        raise SingleClassError("both classes are required")
    return pos, neg


def roc_auc(scores, labels) -> float:
    """Rank-based (Mann-Whitney) AUC with half-credit for ties.

    Equals the probability that a uniformly random positive outscores a
    uniformly random negative, counting ties as half.
    """
    pos, neg = _split_classes(labels)
    s = np.asarray(scores, dtype=np.float64)

    order = np.argsort(s, kind="stable")
    ranks = np.empty(len(s), dtype=np.float64)
    sorted_scores = s[order]
    i = 0
    while i < len(s):
        j = i
        while j + 1 < len(s) and sorted_scores[j + 1] == sorted_scores[i]:
            j += 1
        # 1-based average rank across the tie block
        ranks[order[i:j + 1]] = (i + j) / 2.0 + 1.0
        i = j + 1

    n_pos, n_neg = len(pos), len(neg)
    u = float(ranks[pos].sum()) - n_pos * (n_pos + 1) / 2.0
    return u / (n_pos * n_neg)


def roc_curve(scores, labels) -> list[tuple[float, float]]:
    """(false-positive rate, true-positive rate) points over all distinct
    score thresholds, from (0, 0) to (1, 1); trapezoidal area equals roc_auc."""
    pos, neg = _split_classes(labels)
    s = np.asarray(scores, dtype=np.float64)
    n_pos, n_neg = len(pos), len(neg)

    order = np.argsort(-s, kind="stable")
    y = np.asarray(labels)[order]
    s_desc = s[order]

    points = [(0.0, 0.0)]
    tp = fp = 0
    for i in range(len(s_desc)):
        if y[i] == 1:
            tp += 1
        else:
            fp += 1
        last = i + 1 == len(s_desc)
        if last or s_desc[i + 1] != s_desc[i]:
            points.append((fp / n_neg, tp / n_pos))
    return points


def trapezoid_area(points) -> float:
    area = 0.0
    for (x0, y0), (x1, y1) in zip(points, points[1:]):
        area += (x1 - x0) * (y0 + y1) / 2.0
    return area


def stratified_kfold(labels, k: int, seed: int) -> list[np.ndarray]:
    """k disjoint index folds with per-class counts within 1 of proportional."""
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    y = np.asarray(labels)
    rng = np.random.default_rng(seed)
    folds: list[list[int]] = [[] for _ in range(k)]
    for cls in sorted(set(y.tolist())):
        idx = np.flatnonzero(y == cls)
        if len(idx) < k:
            raise TooFewSamples(f"class {cls} has {len(idx)} members, need >= {k}")
        idx = rng.permutation(idx)
        for i, sample in enumerate(idx.tolist()):
            folds[i % k].append(sample)
    return [np.array(sorted(f), dtype=np.intp) for f in folds]


@dataclass(frozen=True)
class CVReport:
    k: int
    seed: int
    fold_aucs: tuple[float, ...]
    mean_auc: float
    std_auc: float
    per_class_fold_aucs: dict[str, tuple[float, ...]]
    per_class_mean_auc: dict[str, float]
    params: ForestParams
    dataset_digest: str

    def as_dict(self) -> dict:
        return {
            "k": self.k,
            "seed": self.seed,
            "fold_aucs": list(self.fold_aucs),
            "mean_auc": self.mean_auc,
            "std_auc": self.std_auc,
            "per_class_fold_aucs": {c: list(v) for c, v in self.per_class_fold_aucs.items()},
            "per_class_mean_auc": dict(self.per_class_mean_auc),
            "params": self.params.as_dict(),
            "dataset_digest": self.dataset_digest,
        }


def cross_validate_matrix(
    X: np.ndarray,
    y: np.ndarray,
    params: ForestParams,
    k: int,
    seed: int,
    registry: FeatureRegistry | None = None,
    dataset_digest: str = "",
    kernel=None,
) -> CVReport:
    """k-fold CV over an extracted feature matrix.

    Each fold trains a full seven-model suite on the remaining folds and
    scores the held-out fold with the overall and per-class models.
    """
    registry = registry or build_registry()
    y = np.asarray(y)
    folds = stratified_kfold(y, k, seed)

    fold_aucs: list[float] = []
    per_class: dict[str, list[float]] = {cls: [] for cls in CLASS_ORDER}
    for held_out in folds:
        mask = np.ones(len(y), dtype=bool)
        mask[held_out] = False
        train_idx = np.flatnonzero(mask)
        suite = train_suite(X[train_idx], y[train_idx], params, registry, kernel=kernel)

        y_test = y[held_out]
        fold_aucs.append(roc_auc(suite.overall.predict_matrix(X[held_out]), y_test))
        for cls in CLASS_ORDER:
            scores = suite.per_class[cls].predict_matrix(X[held_out])
            per_class[cls].append(roc_auc(scores, y_test))

    aucs = np.array(fold_aucs)
    return CVReport(
        k=k,
        seed=seed,
        fold_aucs=tuple(fold_aucs),
        mean_auc=float(aucs.mean()),
        std_auc=float(aucs.std()),
        per_class_fold_aucs={c: tuple(v) for c, v in per_class.items()},
        per_class_mean_auc={c: float(np.mean(v)) for c, v in per_class.items()},
        params=params,
        dataset_digest=dataset_digest,
    )


def cross_validate(corpus, params: ForestParams, k: int, seed: int,
                   registry: FeatureRegistry | None = None, lexicons=None, kernel=None) -> CVReport:
    """k-fold CV over a labeled snapshot corpus (features extracted once)."""
    from .features import extract_matrix

    registry = registry or build_registry()
    snapshots = [snap for snap, _ in corpus.items]
    y = np.array([label for _, label in corpus.items], dtype=np.int8)
    X = extract_matrix(snapshots, registry, lexicons)
    return cross_validate_matrix(
        X, y, params, k, seed,
        registry=registry, dataset_digest=corpus.digest, kernel=kernel,
    )
