"""The seven-model ensemble: one forest per feature class plus one overall."""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from ..errors import RegistryMismatch
from ..features import CLASS_ORDER, FeatureRegistry, FeatureVector
from .model import ForestModel, ForestParams, train_forest

SCORE_NAMES = ("overall",) + CLASS_ORDER


@dataclass(frozen=True)
class ScoreSuite:
    registry_digest: str
    params: ForestParams
    dataset_digest: str
    trained_at: str | None
    overall: ForestModel
    per_class: dict[str, ForestModel]

    def model_for(self, score_name: str) -> ForestModel:
        return self.overall if score_name == "overall" else self.per_class[score_name]


def train_suite(
    X: np.ndarray,
    y: np.ndarray,
    params: ForestParams,
    registry: FeatureRegistry,
    dataset_digest: str = "",
    trained_at: str | None = None,
    kernel=None,
) -> ScoreSuite:
    """Train the overall model plus six class-block models.

    All models share the hyperparameters; per-class models get seeds offset
    by 1 + class position so no two models share a tree RNG stream.
    """
    overall = train_forest(X, y, params, registry.digest, kernel=kernel)
    per_class: dict[str, ForestModel] = {}
    for i, cls in enumerate(CLASS_ORDER):
        cls_params = replace(params, rng_seed=params.rng_seed + 1 + i)
        per_class[cls] = train_forest(
            X, y, cls_params, registry.digest,
            feature_subset=registry.indices_for_class(cls),
            kernel=kernel,
        )
    return ScoreSuite(
        registry_digest=registry.digest,
        params=params,
        dataset_digest=dataset_digest,
        trained_at=trained_at,
        overall=overall,
        per_class=per_class,
    )


def score_suite(suite: ScoreSuite, vector: FeatureVector) -> dict[str, float]:
    """All seven bot-likelihood scores for one extracted vector."""
    if vector.registry_digest != suite.registry_digest:
        raise RegistryMismatch(
            f"suite was trained under registry {suite.registry_digest[:12]}..., "
            f"vector is from {vector.registry_digest[:12]}..."
        )
    scores = {"overall": suite.overall.predict_score(vector.values)}
    for cls in CLASS_ORDER:
        scores[cls] = suite.per_class[cls].predict_score(vector.values)
    return scores
