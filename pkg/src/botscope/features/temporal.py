"""Timing features: posting rate, inter-tweet intervals, daily rhythm.

Mention tweets carry the consumption side of the account's activity; their
inter-arrival distribution is summarized alongside the account's own posting.
"""

from __future__ import annotations

from ..errors import InsufficientData
from ..snapshot import AccountSnapshot, Tweet
from ..stats import MISSING, burstiness, describe, entropy_from_counts
from .base import FeatureDef, describe_defs

_SCALARS = (
    ("tweets_per_hour", "time.rate", "", "tweets per hour over the observed span"),
    ("span_hours", "time.span", "", "hours between oldest and newest tweet"),
    ("burstiness", "time.burstiness", "", "(std - mean)/(std + mean) of intervals"),
    ("hour_entropy", "time.hour_entropy", "bins=24", "entropy of the hour-of-day histogram"),
    ("dow_entropy", "time.dow_entropy", "bins=7", "entropy of the day-of-week histogram"),
    ("night_fraction", "time.night_fraction", "hours=00-06", "fraction of tweets posted 00:00-06:00 UTC"),
    ("max_hour_fraction", "time.max_hour_fraction", "bins=24", "fraction of tweets in the busiest hour"),
    ("mention_rate_per_hour", "time.rate", "side=mentions", "incoming mentions per hour over their span"),
)


def _specs() -> tuple[FeatureDef, ...]:
    defs = [
        FeatureDef(name=f"temporal.{name}", feature_class="temporal",
                   extractor=extractor, params=params, description=desc)
        for name, extractor, params, desc in _SCALARS
    ]
    defs.extend(describe_defs(
        prefix="temporal.interval", feature_class="temporal",
        extractor="time.interval_describe", params="bins=10,scale=log",
        description="inter-tweet intervals in seconds",
    ))
    defs.extend(describe_defs(
        prefix="temporal.mention_interval", feature_class="temporal",
        extractor="time.interval_describe", params="side=mentions,bins=10,scale=log",
        description="inter-arrival of mention tweets in seconds",
    ))
    return tuple(defs)


SPECS = _specs()


def _ascending_times(tweets: tuple[Tweet, ...]) -> list[int]:
    return sorted(t.created_at for t in tweets)


def intervals_seconds(tweets: tuple[Tweet, ...]) -> list[int]:
    times = _ascending_times(tweets)
    return [b - a for a, b in zip(times, times[1:])]


def hour_of_day(ts: int) -> int:
    return (ts % 86400) // 3600


def day_of_week(ts: int) -> int:
    # epoch day 0 was a Thursday; shift so 0 = Monday
    return (ts // 86400 + 3) % 7


def _rate_per_hour(times: list[int]) -> float:
    if len(times) < 2:
        return MISSING
    span = times[-1] - times[0]
    if span <= 0:
        return MISSING
    return len(times) / (span / 3600.0)


def compute(snapshot: AccountSnapshot, lexicons) -> dict[str, float]:
    times = _ascending_times(snapshot.tweets)
    n = len(times)
    ivals = [b - a for a, b in zip(times, times[1:])]

    out: dict[str, float] = {}
    out["temporal.tweets_per_hour"] = _rate_per_hour(times)
    out["temporal.span_hours"] = (times[-1] - times[0]) / 3600.0 if n >= 2 else MISSING
    try:
        out["temporal.burstiness"] = burstiness(ivals)
    except InsufficientData:
        out["temporal.burstiness"] = MISSING

    if n >= 1:
        hours = [0] * 24
        days = [0] * 7
        night = 0
        for ts in times:
            h = hour_of_day(ts)
            hours[h] += 1
            days[day_of_week(ts)] += 1
            if h < 6:
                night += 1
        out["temporal.hour_entropy"] = entropy_from_counts(hours)
        out["temporal.dow_entropy"] = entropy_from_counts(days)
        out["temporal.night_fraction"] = night / n
        out["temporal.max_hour_fraction"] = max(hours) / n
    else:
        out["temporal.hour_entropy"] = MISSING
        out["temporal.dow_entropy"] = MISSING
        out["temporal.night_fraction"] = MISSING
        out["temporal.max_hour_fraction"] = MISSING

    for field, value in describe(ivals, entropy_scale="log").as_dict().items():
        out[f"temporal.interval.{field}"] = value

    mention_times = _ascending_times(snapshot.mentions)
    out["temporal.mention_rate_per_hour"] = _rate_per_hour(mention_times)
    m_ivals = [b - a for a, b in zip(mention_times, mention_times[1:])]
    for field, value in describe(m_ivals, entropy_scale="log").as_dict().items():
        out[f"temporal.mention_interval.{field}"] = value
    return out
