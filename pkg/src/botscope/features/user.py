"""Profile-metadata features for the scored account."""

from __future__ import annotations

import zlib

from ..snapshot import AccountSnapshot
from ..stats import MISSING
from ..textproc import word_count
from .base import FeatureDef

_DAY = 86400.0

_DEFS = (
    ("age_days", "user.age_days", "", "account age in days at capture time"),
    ("statuses_per_day", "user.rate", "count=statuses", "statuses per day of account age"),
    ("followers_count", "user.raw", "field=followers_count", "follower count"),
    ("friends_count", "user.raw", "field=friends_count", "followee count"),
    ("follower_friend_ratio", "user.ratio", "num=followers,den=friends", "followers per followee"),
    ("friends_per_follower", "user.ratio", "num=friends,den=followers", "followees per follower"),
    ("listed_count", "user.raw", "field=listed_count", "list memberships"),
    ("listed_per_follower", "user.ratio", "num=listed,den=followers", "list memberships per follower"),
    ("favourites_count", "user.raw", "field=favourites_count", "favourited tweets"),
    ("statuses_count", "user.raw", "field=statuses_count", "lifetime status count"),
    ("favourites_per_day", "user.rate", "count=favourites", "favourites per day of account age"),
    ("listed_per_day", "user.rate", "count=listed", "list memberships per day of account age"),
    ("followers_per_day", "user.rate", "count=followers", "followers per day of account age"),
    ("friends_per_day", "user.rate", "count=friends", "followees per day of account age"),
    ("screen_name_length", "user.text_length", "field=screen_name", "screen name length"),
    ("screen_name_digits", "user.digit_count", "field=screen_name", "digits in the screen name"),
    ("screen_name_digit_fraction", "user.digit_fraction", "field=screen_name", "digit fraction of the screen name"),
    ("display_name_length", "user.text_length", "field=display_name", "display name length"),
    ("name_has_digits", "user.has_digits", "field=display_name", "1 if the display name contains a digit"),
    ("description_length", "user.text_length", "field=description", "profile description length"),
    ("description_words", "user.word_count", "field=description", "words in the profile description"),
    ("verified", "user.flag", "field=verified", "1 if the account is verified"),
    ("default_profile", "user.flag", "field=default_profile", "1 if the profile look is unchanged from default"),
    ("url_present", "user.flag", "field=url_present", "1 if the profile links a URL"),
    ("has_location", "user.flag", "field=location", "1 if the profile names a location"),
    ("language_bucket", "user.hash_bucket", "field=language,mod=64", "stable language-code bucket"),
)

SPECS = tuple(
    FeatureDef(name=f"user.{name}", feature_class="user", extractor=extractor,
               params=params, description=desc)
    for name, extractor, params, desc in _DEFS
)


def _per_day(count: int, age_days: float) -> float:
    return count / age_days if age_days > 0 else MISSING


def _ratio(num: float, den: float) -> float:
    return num / den if den > 0 else MISSING


def language_bucket(language: str, mod: int = 64) -> int:
    return zlib.crc32(language.encode("utf-8")) % mod


def compute(snapshot: AccountSnapshot, lexicons) -> dict[str, float]:
    u = snapshot.user
    age_days = (snapshot.captured_at - u.created_at) / _DAY
    name = u.screen_name
    digits = sum(c.isdigit() for c in name)
    return {
        "user.age_days": age_days,
        "user.statuses_per_day": _per_day(u.statuses_count, age_days),
        "user.followers_count": float(u.followers_count),
        "user.friends_count": float(u.friends_count),
        "user.follower_friend_ratio": _ratio(u.followers_count, u.friends_count),
        "user.friends_per_follower": _ratio(u.friends_count, u.followers_count),
        "user.listed_count": float(u.listed_count),
        "user.listed_per_follower": _ratio(u.listed_count, u.followers_count),
        "user.favourites_count": float(u.favourites_count),
        "user.statuses_count": float(u.statuses_count),
        "user.favourites_per_day": _per_day(u.favourites_count, age_days),
        "user.listed_per_day": _per_day(u.listed_count, age_days),
        "user.followers_per_day": _per_day(u.followers_count, age_days),
        "user.friends_per_day": _per_day(u.friends_count, age_days),
        "user.screen_name_length": float(len(name)),
        "user.screen_name_digits": float(digits),
        "user.screen_name_digit_fraction": digits / len(name),
        "user.display_name_length": float(len(u.display_name)),
        "user.name_has_digits": 1.0 if any(c.isdigit() for c in u.display_name) else 0.0,
        "user.description_length": float(len(u.description)),
        "user.description_words": float(word_count(u.description)),
        "user.verified": 1.0 if u.verified else 0.0,
        "user.default_profile": 1.0 if u.default_profile else 0.0,
        "user.url_present": 1.0 if u.url_present else 0.0,
        "user.has_location": 1.0 if u.location.strip() else 0.0,
        "user.language_bucket": float(language_bucket(u.language)),
    }
