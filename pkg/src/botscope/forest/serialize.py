"""Model persistence: versioned, gzip-compressed canonical JSON.

Canonical form (sorted keys, compact separators, shortest-roundtrip floats,
fixed gzip mtime) makes serialization a pure function of the model, so two
identical trainings produce byte-identical files.
"""

from __future__ import annotations

import gzip
import json
from pathlib import Path

import numpy as np

from ..errors import ParseError
from .cart import Tree
from .model import ForestModel, ForestParams
from .suite import ScoreSuite

FORMAT_NAME = "botscope-suite"
FORMAT_VERSION = 1


def _tree_doc(tree: Tree) -> dict:
    return {
        "feature": tree.feature.tolist(),
        "threshold": tree.threshold.tolist(),
        "left": tree.left.tolist(),
        "right": tree.right.tolist(),
        "value": tree.value.tolist(),
        "count": tree.count.tolist(),
    }


def _tree_from_doc(doc: dict) -> Tree:
    return Tree(
        feature=np.array(doc["feature"], dtype=np.int32),
        threshold=np.array(doc["threshold"], dtype=np.float64),
        left=np.array(doc["left"], dtype=np.int32),
        right=np.array(doc["right"], dtype=np.int32),
        value=np.array(doc["value"], dtype=np.float64),
        count=np.array(doc["count"], dtype=np.int32),
    )


def _model_doc(model: ForestModel) -> dict:
    return {
        "params": model.params.as_dict(),
        "feature_subset": list(model.feature_subset),
        "medians": model.medians.tolist(),
        "trees": [_tree_doc(t) for t in model.trees],
    }


def _model_from_doc(doc: dict, registry_digest: str) -> ForestModel:
    return ForestModel(
        params=ForestParams(**doc["params"]),
        registry_digest=registry_digest,
        feature_subset=tuple(doc["feature_subset"]),
        medians=np.array(doc["medians"], dtype=np.float64),
        trees=tuple(_tree_from_doc(t) for t in doc["trees"]),
    )


def suite_to_bytes(suite: ScoreSuite) -> bytes:
    doc = {
        "format": FORMAT_NAME,
        "version": FORMAT_VERSION,
        "registry_digest": suite.registry_digest,
        "dataset_digest": suite.dataset_digest,
        "trained_at": suite.trained_at,
        "params": suite.params.as_dict(),
        "overall": _model_doc(suite.overall),
        "per_class": {cls: _model_doc(m) for cls, m in suite.per_class.items()},
    }
    text = json.dumps(doc, sort_keys=True, separators=(",", ":"), allow_nan=False)
    return gzip.compress(text.encode("utf-8"), mtime=0)


def suite_from_bytes(blob: bytes) -> ScoreSuite:
    try:
        doc = json.loads(gzip.decompress(blob).decode("utf-8"))
    except (OSError, ValueError) as exc:
        raise ParseError(f"not a model file: {exc}") from None
    if doc.get("format") != FORMAT_NAME:
        raise ParseError(f"unknown model format {doc.get('format')!r}")
    if doc.get("version") != FORMAT_VERSION:
        raise ParseError(f"unsupported model version {doc.get('version')!r}")
    digest = doc["registry_digest"]
    return ScoreSuite(
        registry_digest=digest,
        params=ForestParams(**doc["params"]),
        dataset_digest=doc["dataset_digest"],
        trained_at=doc["trained_at"],
        overall=_model_from_doc(doc["overall"], digest),
        per_class={cls: _model_from_doc(m, digest) for cls, m in doc["per_class"].items()},
    )


def save_suite(suite: ScoreSuite, path: str | Path) -> None:
    Path(path).write_bytes(suite_to_bytes(suite))


def load_suite(path: str | Path) -> ScoreSuite:
    return suite_from_bytes(Path(path).read_bytes())
