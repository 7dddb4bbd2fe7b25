"""Shared declaration type for registry-driven features."""

from __future__ import annotations

from dataclasses import dataclass

from ..stats import DESCRIBE_FIELDS

CLASS_ORDER = ("network", "user", "friends", "temporal", "content", "sentiment")


@dataclass(frozen=True)
class FeatureDef:
    """One registered feature: a unique name plus audit metadata.

    extractor and params identify the computation so the registry digest
    changes whenever the meaning of a feature does, not just its name.
    """

    name: str
    feature_class: str
    extractor: str
    params: str = ""
    description: str = ""


def describe_defs(
    prefix: str,
    feature_class: str,
    extractor: str,
    params: str,
    description: str,
) -> tuple[FeatureDef, ...]:
    """One FeatureDef per summary statistic of a described distribution."""
    return tuple(
        FeatureDef(
            name=f"{prefix}.{field}",
            feature_class=feature_class,
            extractor=f"{extractor}.{field}",
            params=params,
            description=f"{field} of {description}",
        )
        for field in DESCRIBE_FIELDS
    )
