"""Ordered feature catalog binding vectors to models.

The registry digest is baked into every trained model, so a model can never
be applied to a vector produced under a different feature set.
"""

from __future__ import annotations

import hashlib
from functools import lru_cache

from . import content, friends, network, sentiment, temporal, user
from .base import CLASS_ORDER, FeatureDef

_CLASS_MODULES = {
    "network": network,
    "user": user,
    "friends": friends,
    "temporal": temporal,
    "content": content,
    "sentiment": sentiment,
}


class FeatureRegistry:
    def __init__(self, specs: tuple[FeatureDef, ...]):
        names = [s.name for s in specs]
        if len(set(names)) != len(names):
            dupes = sorted({n for n in names if names.count(n) > 1})
            raise ValueError(f"duplicate feature names: {dupes}")
        for s in specs:
            if s.feature_class not in CLASS_ORDER:
                raise ValueError(f"unknown feature class {s.feature_class!r} on {s.name}")
        # classes must form contiguous blocks in canonical order
        seen_classes = [s.feature_class for s in specs]
        expected = [c for c in CLASS_ORDER for _ in range(seen_classes.count(c))]
        if seen_classes != expected:
            raise ValueError("feature classes must be contiguous blocks in canonical order")
        self.specs = tuple(specs)
        self.names = tuple(names)
        self._index = {name: i for i, name in enumerate(names)}
        self._class_indices = {
            cls: tuple(i for i, s in enumerate(specs) if s.feature_class == cls)
            for cls in CLASS_ORDER
        }

    def __len__(self) -> int:
        return len(self.specs)

    def index_of(self, name: str) -> int:
        return self._index[name]

    def indices_for_class(self, feature_class: str) -> tuple[int, ...]:
        return self._class_indices[feature_class]

    def class_counts(self) -> dict[str, int]:
        return {cls: len(self._class_indices[cls]) for cls in CLASS_ORDER}

    @property
    def digest(self) -> str:
        h = hashlib.sha256()
        for s in self.specs:
            h.update(f"{s.name}|{s.feature_class}|{s.extractor}|{s.params}\n".encode("utf-8"))
        return h.hexdigest()

    def manifest_rows(self) -> list[tuple[str, str, str, str]]:
        return [(s.name, s.feature_class, s.params, s.description) for s in self.specs]


@lru_cache(maxsize=1)
def build_registry() -> FeatureRegistry:
    specs: list[FeatureDef] = []
    for cls in CLASS_ORDER:
        specs.extend(_CLASS_MODULES[cls].SPECS)
    return FeatureRegistry(tuple(specs))
