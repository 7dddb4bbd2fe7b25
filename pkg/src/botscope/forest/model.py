"""Random Forest training and scoring over registry-aligned vectors."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from ..errors import RegistryMismatch, SingleClassError
from .cart import Tree, grow_tree
from .rng import bootstrap_indices, tree_rng


@dataclass(frozen=True)
class ForestParams:
    n_trees: int = 100
    max_features: int | None = None  # None -> floor(sqrt(d))
    min_samples_leaf: int = 1
    max_depth: int | None = None
    bootstrap: bool = True
    rng_seed: int = 0

    def __post_init__(self):
        if self.n_trees < 1:
            raise ValueError(f"n_trees must be >= 1, got {self.n_trees}")
        if self.min_samples_leaf < 1:
            raise ValueError(f"min_samples_leaf must be >= 1, got {self.min_samples_leaf}")
        if self.max_features is not None and self.max_features < 1:
            raise ValueError(f"max_features must be >= 1, got {self.max_features}")
        if self.max_depth is not None and self.max_depth < 1:
            raise ValueError(f"max_depth must be >= 1, got {self.max_depth}")

    def resolve_max_features(self, d: int) -> int:
        k = self.max_features if self.max_features is not None else int(math.isqrt(d))
        return max(1, min(k, d))

    def as_dict(self) -> dict:
        return {
            "n_trees": self.n_trees,
            "max_features": self.max_features,
            "min_samples_leaf": self.min_samples_leaf,
            "max_depth": self.max_depth,
            "bootstrap": self.bootstrap,
            "rng_seed": self.rng_seed,
        }


@dataclass(frozen=True)
class ForestModel:
    params: ForestParams
    registry_digest: str
    feature_subset: tuple[int, ...]  # registry positions this model sees
    medians: np.ndarray              # imputation table aligned with feature_subset
    trees: tuple[Tree, ...] = field(repr=False)

    def _check_digest(self, digest: str) -> None:
        if digest != self.registry_digest:
            raise RegistryMismatch(
                f"model was trained under registry {self.registry_digest[:12]}..., "
                f"got a vector from {digest[:12]}..."
            )

    def impute(self, X_full: np.ndarray) -> np.ndarray:
        """Select this model's feature block and fill missing values."""
        X_sub = np.asarray(X_full, dtype=np.float64)[:, list(self.feature_subset)]
        return np.where(np.isnan(X_sub), self.medians, X_sub)

    def predict_matrix(self, X_full: np.ndarray, registry_digest: str | None = None) -> np.ndarray:
        if registry_digest is not None:
            self._check_digest(registry_digest)
        X = self.impute(X_full)
        total = np.zeros(X.shape[0])
        for tree in self.trees:
            total += tree.predict(X)
        return total / len(self.trees)

    def predict_score(self, values: np.ndarray, registry_digest: str | None = None) -> float:
        return float(self.predict_matrix(np.atleast_2d(values), registry_digest)[0])


def _imputation_medians(X_sub: np.ndarray) -> np.ndarray:
    """Per-column median ignoring missing values; 0 for all-missing columns."""
    medians = np.zeros(X_sub.shape[1])
    for j in range(X_sub.shape[1]):
        col = X_sub[:, j]
        finite = col[~np.isnan(col)]
        if len(finite):
            medians[j] = np.median(finite)
    return medians


def train_forest(
    X: np.ndarray,
    y: np.ndarray,
    params: ForestParams,
    registry_digest: str = "",
    feature_subset: tuple[int, ...] | None = None,
    kernel=None,
) -> ForestModel:
    """Train a bagged CART ensemble; fully reproducible given (data, params)."""
    X = np.asarray(X, dtype=np.float64)
    y = np.asarray(y, dtype=np.int8)
    n, d_total = X.shape
    if n != len(y) or n < 2:
        raise ValueError(f"need |X| = |y| >= 2, got {n} rows and {len(y)} labels")
    classes = set(np.unique(y).tolist())
    if not classes <= {0, 1}:
        raise ValueError(f"labels must be 0/1, got {sorted(classes)}")
    if len(classes) < 2:
        raise SingleClassError("training data holds a single class")

    subset = tuple(feature_subset) if feature_subset is not None else tuple(range(d_total))
    X_sub = X[:, list(subset)]
    medians = _imputation_medians(X_sub)
    X_imp = np.where(np.isnan(X_sub), medians, X_sub)
    d = len(subset)
    k = params.resolve_max_features(d)

    trees = []
    for t in range(params.n_trees):
        rng = tree_rng(params.rng_seed, t)
        if params.bootstrap:
            sample = rng.integers(0, n, size=n)
            Xt, yt = X_imp[sample], y[sample]
        else:
            Xt, yt = X_imp, y
        trees.append(grow_tree(
            Xt, yt, rng,
            max_features=k,
            min_samples_leaf=params.min_samples_leaf,
            max_depth=params.max_depth,
            kernel=kernel,
        ))

    return ForestModel(
        params=params,
        registry_digest=registry_digest,
        feature_subset=subset,
        medians=medians,
        trees=tuple(trees),
    )


def oob_accuracy(model: ForestModel, X: np.ndarray, y: np.ndarray) -> float:
    """Out-of-bag accuracy on the training data.

    Bootstrap samples are regenerated from each tree's RNG key rather than
    stored. Requires bootstrap=true; samples never left out of any bag are
    skipped.
    """
    if not model.params.bootstrap:
        raise ValueError("out-of-bag evaluation needs bootstrap sampling")
    X_imp = model.impute(np.asarray(X, dtype=np.float64))
    y = np.asarray(y)
    n = len(y)
    score_sum = np.zeros(n)
    votes = np.zeros(n, dtype=np.int64)
    for t, tree in enumerate(model.trees):
        in_bag = np.zeros(n, dtype=bool)
        in_bag[bootstrap_indices(model.params.rng_seed, t, n)] = True
        oob = ~in_bag
        if not oob.any():
            continue
        score_sum[oob] += tree.predict(X_imp[oob])
        votes[oob] += 1
    seen = votes > 0
    if not seen.any():
        raise ValueError("no out-of-bag samples; add trees or data")
    pred = (score_sum[seen] / votes[seen]) >= 0.5
    return float(np.mean(pred == (y[seen] == 1)))


def memorizing_params(d: int, rng_seed: int = 0) -> ForestParams:
    """Single unrestricted tree: memorizes any consistently labeled data."""
    return ForestParams(
        n_trees=1, max_features=d, min_samples_leaf=1,
        max_depth=None, bootstrap=False, rng_seed=rng_seed,
    )
