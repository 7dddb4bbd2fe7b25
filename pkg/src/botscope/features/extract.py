"""Snapshot-to-vector assembly in registry order."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import RegistryMismatch
from ..lexicons import Lexicons, load_default_lexicons
from ..snapshot import AccountSnapshot
from .base import CLASS_ORDER
from .registry import FeatureRegistry, _CLASS_MODULES, build_registry


@dataclass(frozen=True)
class FeatureVector:
    registry_digest: str
    values: np.ndarray  # float64, aligned positionally to the registry

    def as_dict(self, registry: FeatureRegistry) -> dict[str, float]:
        if registry.digest != self.registry_digest:
            raise RegistryMismatch("vector was extracted under a different registry")
        return {name: float(v) for name, v in zip(registry.names, self.values)}


def extract_all(
    snapshot: AccountSnapshot,
    registry: FeatureRegistry | None = None,
    lexicons: Lexicons | None = None,
) -> FeatureVector:
    registry = registry or build_registry()
    lexicons = lexicons or load_default_lexicons()

    merged: dict[str, float] = {}
    for cls in CLASS_ORDER:
        merged.update(_CLASS_MODULES[cls].compute(snapshot, lexicons))

    if set(merged) != set(registry.names):
        missing = sorted(set(registry.names) - set(merged))
        extra = sorted(set(merged) - set(registry.names))
        raise RegistryMismatch(f"extractors disagree with registry: missing={missing[:5]} extra={extra[:5]}")

    values = np.array([merged[name] for name in registry.names], dtype=np.float64)
    return FeatureVector(registry_digest=registry.digest, values=values)


def extract_matrix(
    snapshots,
    registry: FeatureRegistry | None = None,
    lexicons: Lexicons | None = None,
) -> np.ndarray:
    registry = registry or build_registry()
    lexicons = lexicons or load_default_lexicons()
    return np.vstack([extract_all(s, registry, lexicons).values for s in snapshots]) \
        if snapshots else np.empty((0, len(registry)))
