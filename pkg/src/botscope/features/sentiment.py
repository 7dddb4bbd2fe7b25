"""Affect features from word lexicons and emoticons over the account's tweets.

Each tweet gets up to five per-tweet scores (happiness, valence, arousal,
dominance, emoticon polarity); a tweet with no matching token or emoticon
contributes nothing to that score's aggregate.
"""

from __future__ import annotations

from ..lexicons import Lexicons
from ..snapshot import AccountSnapshot
from ..stats import MISSING
from ..textproc import strip_urls, words
from .base import FeatureDef

_SCORES = ("happiness", "valence", "arousal", "dominance", "emoticon")


def _specs() -> tuple[FeatureDef, ...]:
    defs: list[FeatureDef] = []
    for score in _SCORES:
        for agg in ("mean", "std"):
            defs.append(FeatureDef(
                name=f"sentiment.{score}.{agg}",
                feature_class="sentiment",
                extractor="sentiment.tweet_score",
                params=f"score={score},agg={agg}",
                description=f"{agg} per-tweet {score} score",
            ))
    defs.append(FeatureDef(
        name="sentiment.emoticon_tweet_fraction", feature_class="sentiment",
        extractor="sentiment.emoticon_fraction",
        description="fraction of tweets containing at least one emoticon",
    ))
    defs.append(FeatureDef(
        name="sentiment.happiness_coverage", feature_class="sentiment",
        extractor="sentiment.coverage", params="lexicon=happiness",
        description="fraction of tokens found in the happiness lexicon",
    ))
    defs.append(FeatureDef(
        name="sentiment.vad_coverage", feature_class="sentiment",
        extractor="sentiment.coverage", params="lexicon=vad",
        description="fraction of tokens found in the VAD lexicon",
    ))
    return tuple(defs)


SPECS = _specs()


def _mean_std(values: list[float]) -> tuple[float, float]:
    if not values:
        return MISSING, MISSING
    n = len(values)
    mean = sum(values) / n
    var = sum((v - mean) ** 2 for v in values) / n
    return mean, var ** 0.5


def compute(snapshot: AccountSnapshot, lexicons: Lexicons) -> dict[str, float]:
    per_score: dict[str, list[float]] = {s: [] for s in _SCORES}
    tweets_with_emoticons = 0
    total_tokens = 0
    happiness_hits = 0
    vad_hits = 0

    for tweet in snapshot.tweets:
        toks = words(tweet.text)
        total_tokens += len(toks)

        hap = [lexicons.happiness[t] for t in toks if t in lexicons.happiness]
        happiness_hits += len(hap)
        if hap:
            per_score["happiness"].append(sum(hap) / len(hap))

        vad = [lexicons.vad[t] for t in toks if t in lexicons.vad]
        vad_hits += len(vad)
        if vad:
            k = len(vad)
            per_score["valence"].append(sum(v for v, _, _ in vad) / k)
            per_score["arousal"].append(sum(a for _, a, _ in vad) / k)
            per_score["dominance"].append(sum(d for _, _, d in vad) / k)

        polarities = lexicons.find_emoticons(strip_urls(tweet.text))
        if polarities:
            tweets_with_emoticons += 1
            per_score["emoticon"].append(sum(polarities) / len(polarities))

    out: dict[str, float] = {}
    for score in _SCORES:
        mean, std = _mean_std(per_score[score])
        out[f"sentiment.{score}.mean"] = mean
        out[f"sentiment.{score}.std"] = std

    n = len(snapshot.tweets)
    out["sentiment.emoticon_tweet_fraction"] = tweets_with_emoticons / n if n else MISSING
    out["sentiment.happiness_coverage"] = happiness_hits / total_tokens if total_tokens else MISSING
    out["sentiment.vad_coverage"] = vad_hits / total_tokens if total_tokens else MISSING
    return out
