"""Deterministic descriptive-statistics primitives shared by the feature extractors.

Everything here is pure Python with sequential left-to-right summation, so
results are reproducible bit-for-bit and can be checked exactly against
straightforward reference loops. Population (not sample) standard deviation
is used throughout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InsufficientData

MISSING = float("nan")

DESCRIBE_FIELDS = (
    "count",
    "min",
    "max",
    "mean",
    "median",
    "std",
    "skewness",
    "kurtosis",
    "entropy_bits",
)


def is_missing(value: float) -> bool:
    return isinstance(value, float) and math.isnan(value)


@dataclass(frozen=True)
class DescriptiveStats:
    count: int
    min: float
    max: float
    mean: float
    median: float
    std: float
    skewness: float
    kurtosis: float
    entropy_bits: float

    def as_dict(self) -> dict[str, float]:
        return {name: float(getattr(self, name)) for name in DESCRIBE_FIELDS}


def describe(values, *, entropy_bins: int = 10, entropy_scale: str = "linear") -> DescriptiveStats:
    """Summarize a list of reals: count, extrema, moments through excess kurtosis, entropy.

    An empty input yields the missing-value sentinel for every statistic.
    Skewness and kurtosis are defined as 0 for zero-variance input.
    """
    vals = [float(v) for v in values]
    n = len(vals)
    if n == 0:
        return DescriptiveStats(0, MISSING, MISSING, MISSING, MISSING, MISSING, MISSING, MISSING, MISSING)

    mean = sum(vals) / n
    ordered = sorted(vals)
    mid = n // 2
    if n % 2 == 1:
        median = ordered[mid]
    else:
        median = (ordered[mid - 1] + ordered[mid]) / 2
    var = sum((v - mean) ** 2 for v in vals) / n
    std = math.sqrt(var)
    if std == 0.0:
        skewness = 0.0
        kurtosis = 0.0
    else:
        m3 = sum((v - mean) ** 3 for v in vals) / n
        m4 = sum((v - mean) ** 4 for v in vals) / n
        skewness = m3 / std**3
        kurtosis = m4 / std**4 - 3.0
    entropy = histogram_entropy(vals, entropy_bins, scale=entropy_scale)
    return DescriptiveStats(n, ordered[0], ordered[-1], mean, median, std, skewness, kurtosis, entropy)


def entropy_from_counts(counts) -> float:
    """Shannon entropy in bits of a count distribution."""
    total = sum(counts)
    if total <= 0:
        return 0.0
    h = 0.0
    for c in counts:
        if c > 0:
            p = c / total
            h -= p * math.log2(p)
    return h


def histogram_entropy(values, bins: int, scale: str = "linear") -> float:
    """Entropy in bits of the equal-width bin-count distribution over [min, max].

    With ``scale="log"`` bin 0 is reserved as an underflow bin for values <= 0
    and the remaining bins-1 bins split the positive range in log space; the
    total outcome count therefore never exceeds ``bins`` and the entropy stays
    bounded by log2(bins). Returns 0 for an empty or constant input.
    """
    if bins < 1:
        raise ValueError(f"bins must be >= 1, got {bins}")
    vals = [float(v) for v in values]
    if not vals:
        return 0.0

    counts = [0] * bins
    if scale == "linear":
        lo = min(vals)
        hi = max(vals)
        if lo == hi:
            return 0.0
        width = (hi - lo) / bins
        for v in vals:
            i = int((v - lo) / width)
            counts[i if i < bins else bins - 1] += 1
    elif scale == "log":
        positives = [v for v in vals if v > 0.0]
        counts[0] = len(vals) - len(positives)
        if positives:
            lo = math.log10(min(positives))
            hi = math.log10(max(positives))
            if hi == lo or bins == 1:
                counts[1 if bins > 1 else 0] += len(positives)
            else:
                width = (hi - lo) / (bins - 1)
                for v in positives:
                    i = 1 + int((math.log10(v) - lo) / width)
                    counts[i if i < bins else bins - 1] += 1
    else:
        raise ValueError(f"unknown scale: {scale!r}")
    return entropy_from_counts(counts)


def burstiness(intervals) -> float:
    """(sigma - mu) / (sigma + mu) of the intervals; -1 for a perfectly periodic stream."""
    vals = [float(v) for v in intervals]
    if len(vals) < 2:
        raise InsufficientData(f"burstiness needs >= 2 intervals, got {len(vals)}")
    n = len(vals)
    mu = sum(vals) / n
    sigma = math.sqrt(sum((v - mu) ** 2 for v in vals) / n)
    denom = sigma + mu
    if denom == 0.0:
        return 0.0
    return (sigma - mu) / denom
