from .base import CLASS_ORDER, FeatureDef
from .extract import FeatureVector, extract_all, extract_matrix
from .registry import FeatureRegistry, build_registry

__all__ = [
    "CLASS_ORDER",
    "FeatureDef",
    "FeatureRegistry",
    "FeatureVector",
    "build_registry",
    "extract_all",
    "extract_matrix",
]
