"""Linguistic features over the account's own tweets."""

from __future__ import annotations

from ..pos import TAGS, tag_fractions
from ..snapshot import AccountSnapshot
from ..stats import MISSING, describe
from ..textproc import words
from .base import FeatureDef, describe_defs


def _specs() -> tuple[FeatureDef, ...]:
    defs: list[FeatureDef] = []
    defs.extend(describe_defs(
        prefix="content.words", feature_class="content",
        extractor="content.words_describe", params="bins=10,scale=linear",
        description="words per tweet",
    ))
    defs.extend(describe_defs(
        prefix="content.chars", feature_class="content",
        extractor="content.chars_describe", params="bins=10,scale=linear",
        description="characters per tweet",
    ))
    for tag in TAGS:
        for agg in ("mean", "std"):
            defs.append(FeatureDef(
                name=f"content.pos.{tag}.{agg}",
                feature_class="content",
                extractor="content.pos_fraction",
                params=f"tag={tag},agg={agg}",
                description=f"{agg} per-tweet fraction of {tag} tokens",
            ))
    for name, extractor, desc in (
        ("hashtags_per_tweet", "content.mean_count", "mean hashtags per tweet"),
        ("mentions_per_tweet", "content.mean_count", "mean user mentions per tweet"),
        ("urls_per_tweet", "content.mean_count", "mean URLs per tweet"),
        ("fraction_retweets", "content.fraction", "fraction of tweets that are retweets"),
        ("fraction_replies", "content.fraction", "fraction of tweets that are replies"),
        ("lexical_diversity", "content.lexical_diversity", "distinct words / total words"),
    ):
        defs.append(FeatureDef(
            name=f"content.{name}", feature_class="content",
            extractor=extractor, params=f"stat={name}", description=desc,
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


def compute(snapshot: AccountSnapshot, lexicons) -> dict[str, float]:
    tweets = snapshot.tweets
    n = len(tweets)
    out: dict[str, float] = {}

    token_lists = [words(t.text) for t in tweets]
    word_counts = [float(len(toks)) for toks in token_lists]
    char_counts = [float(len(t.text)) for t in tweets]
    for field, value in describe(word_counts).as_dict().items():
        out[f"content.words.{field}"] = value
    for field, value in describe(char_counts).as_dict().items():
        out[f"content.chars.{field}"] = value

    # per-tag frequency aggregated over tweets that have at least one token
    per_tag: dict[str, list[float]] = {tag: [] for tag in TAGS}
    for t, toks in zip(tweets, token_lists):
        if not toks:
            continue
        fractions = tag_fractions(t.text, lexicons.closed_class)
        for tag in TAGS:
            per_tag[tag].append(fractions[tag])
    for tag in TAGS:
        mean, std = _mean_std(per_tag[tag])
        out[f"content.pos.{tag}.mean"] = mean
        out[f"content.pos.{tag}.std"] = std

    if n == 0:
        out["content.hashtags_per_tweet"] = MISSING
        out["content.mentions_per_tweet"] = MISSING
        out["content.urls_per_tweet"] = MISSING
        out["content.fraction_retweets"] = MISSING
        out["content.fraction_replies"] = MISSING
    else:
        out["content.hashtags_per_tweet"] = sum(len(t.hashtags) for t in tweets) / n
        out["content.mentions_per_tweet"] = sum(len(t.mentioned_users) for t in tweets) / n
        out["content.urls_per_tweet"] = sum(t.url_count for t in tweets) / n
        out["content.fraction_retweets"] = sum(t.is_retweet for t in tweets) / n
        out["content.fraction_replies"] = sum(t.is_reply for t in tweets) / n

    total_tokens = sum(len(toks) for toks in token_lists)
    if total_tokens == 0:
        out["content.lexical_diversity"] = MISSING
    else:
        distinct = len({tok for toks in token_lists for tok in toks})
        out["content.lexical_diversity"] = distinct / total_tokens
    return out
