"""Distribution features over the account's observed contacts."""

from __future__ import annotations

from ..snapshot import AccountSnapshot, derive_contacts
from ..stats import describe
from .base import FeatureDef, describe_defs

_ATTRS = (
    ("followers", "follower counts of contacts"),
    ("followees", "followee counts of contacts"),
    ("statuses", "status counts of contacts"),
    ("age_days", "account ages of contacts in days"),
)


def _specs() -> tuple[FeatureDef, ...]:
    defs = [FeatureDef(
        name="friends.count",
        feature_class="friends",
        extractor="friends.contact_count",
        description="number of distinct observed contacts",
    )]
    for attr, desc in _ATTRS:
        defs.extend(describe_defs(
            prefix=f"friends.{attr}",
            feature_class="friends",
            extractor="friends.describe",
            params=f"attr={attr},bins=10,scale=log",
            description=desc,
        ))
    return tuple(defs)


SPECS = _specs()


def compute(snapshot: AccountSnapshot, lexicons) -> dict[str, float]:
    contacts = derive_contacts(snapshot)
    columns = {
        "followers": [float(c.followers_count) for c in contacts],
        "followees": [float(c.friends_count) for c in contacts],
        "statuses": [float(c.statuses_count) for c in contacts],
        "age_days": [(snapshot.captured_at - c.created_at) / 86400.0 for c in contacts],
    }
    out = {"friends.count": float(len(contacts))}
    for attr, values in columns.items():
        for field, value in describe(values, entropy_scale="log").as_dict().items():
            out[f"friends.{attr}.{field}"] = value
    return out
