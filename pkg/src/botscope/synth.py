"""Deterministic synthetic labeled corpus for desk-scale benchmarks.

Bot accounts post near-periodically from small text template pools with
heavy hashtag reuse, few reply targets, and homogeneous young contacts;
human accounts post with lognormal gaps gated by a nightly quiet period,
draw from larger vocabularies, reply and retweet more diversely, and have
heterogeneous contacts. A small fraction of each class borrows traits from
the other ("stealth" bots, "power-user" humans) so no single feature
separates the classes perfectly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

import numpy as np

from .ingest import BOT_LABEL, HUMAN_LABEL, LabeledCorpus, corpus_digest
from .lexicons import load_default_lexicons
from .snapshot import AccountSnapshot, format_timestamp, serialize_snapshot, snapshot_from_document

CAPTURED_AT = 1767225600  # 2026-01-01T00:00:00Z
_DAY = 86400.0


@dataclass(frozen=True)
class BotProfile:
    base_interval_s: tuple[float, float] = (180.0, 5400.0)
    interval_jitter: tuple[float, float] = (0.02, 0.45)
    hashtag_rate: tuple[float, float] = (0.4, 3.0)  # Poisson mean per tweet
    template_pool: tuple[int, int] = (3, 25)
    duplicate_rate: tuple[float, float] = (0.5, 0.95)
    reply_rate: tuple[float, float] = (0.0, 0.18)
    emoticon_rate: tuple[float, float] = (0.25, 0.9)
    url_rate: tuple[float, float] = (0.15, 0.8)
    words_per_tweet: tuple[float, float] = (5.0, 10.0)  # per-account mean
    age_days: tuple[float, float] = (10.0, 420.0)
    stealth_fraction: float = 0.12

    def __post_init__(self):
        _check_rates(self, ("duplicate_rate", "reply_rate", "emoticon_rate", "url_rate"))
        _check_fraction(self.stealth_fraction, "stealth_fraction")
        _check_spans(self, ("base_interval_s", "words_per_tweet", "age_days"), floor_above=0.0)
        _check_spans(self, ("interval_jitter", "hashtag_rate"), floor_above=None)
        _check_spans(self, ("template_pool",), floor_above=0.0)


@dataclass(frozen=True)
class HumanProfile:
    base_gap_s: tuple[float, float] = (1200.0, 21600.0)
    gap_sigma: tuple[float, float] = (0.9, 1.8)
    vocabulary: tuple[int, int] = (600, 4000)
    hashtag_rate: tuple[float, float] = (0.0, 1.0)  # Poisson mean per tweet
    reply_rate: tuple[float, float] = (0.06, 0.55)
    emoticon_rate: tuple[float, float] = (0.05, 0.45)
    url_rate: tuple[float, float] = (0.0, 0.4)
    words_per_tweet: tuple[float, float] = (7.0, 14.0)  # per-account mean
    age_days: tuple[float, float] = (120.0, 3200.0)
    power_fraction: float = 0.10

    def __post_init__(self):
        _check_rates(self, ("reply_rate", "emoticon_rate", "url_rate"))
        _check_fraction(self.power_fraction, "power_fraction")
        _check_spans(self, ("base_gap_s", "gap_sigma", "words_per_tweet", "age_days"),
                     floor_above=0.0)
        _check_spans(self, ("vocabulary",), floor_above=0.0)
        _check_spans(self, ("hashtag_rate",), floor_above=None)


def _check_rates(profile: Any, names: tuple[str, ...]) -> None:
    for name in names:
        lo, hi = getattr(profile, name)
        if not (0.0 <= lo <= hi <= 1.0):
            raise ValueError(f"{name} range must sit inside [0, 1], got ({lo}, {hi})")


def _check_spans(profile: Any, names: tuple[str, ...], floor_above: float | None) -> None:
    """Each named (lo, hi) must be ordered; floor_above=0.0 also demands lo > 0."""
    for name in names:
        lo, hi = getattr(profile, name)
        if lo > hi:
            raise ValueError(f"{name} range is reversed: ({lo}, {hi})")
        if floor_above is not None and lo <= floor_above:
            raise ValueError(f"{name} must stay above {floor_above}, got ({lo}, {hi})")
        if floor_above is None and lo < 0:
            raise ValueError(f"{name} must be nonnegative, got ({lo}, {hi})")


def _check_fraction(value: float, name: str) -> None:
    if not 0.0 <= value <= 1.0:
        raise ValueError(f"{name} must sit inside [0, 1], got {value}")


@dataclass(frozen=True)
class SynthParams:
    seed: int = 42
    n_bots: int = 10
    n_humans: int = 10
    bot: BotProfile = field(default_factory=BotProfile)
    human: HumanProfile = field(default_factory=HumanProfile)

    def __post_init__(self):
        if self.n_bots < 1 or self.n_humans < 1:
            raise ValueError("counts per class must be >= 1")


def _word_pools() -> dict[str, list[str]]:
    lex = load_default_lexicons()
    happy = sorted(lex.happiness)
    positive = [w for w in happy if lex.happiness[w] >= 6.5]
    negative = [w for w in happy if lex.happiness[w] <= 3.8]
    neutral = [w for w in happy if 3.8 < lex.happiness[w] < 6.5]
    function = [
        "the", "a", "an", "to", "and", "of", "in", "on", "for", "with", "my",
        "your", "our", "is", "are", "was", "be", "this", "that", "it", "we",
        "you", "they", "at", "from", "so", "just", "now", "very", "not",
    ]
    filler = [
        "meeting", "project", "minute", "story", "moment", "season", "coast",
        "kitchen", "garden", "window", "journey", "ticket", "weather", "engine",
        "station", "bridge", "castle", "valley", "random", "answer", "question",
        "signal", "record", "number", "letter", "bottle", "camera", "picture",
        "travel", "flight", "train", "island", "forest", "river", "mountain",
        "corner", "market", "office", "studio", "lesson", "chapter", "series",
        "update", "detail", "review", "result", "effort", "chance", "choice",
        "player", "singer", "artist", "writer", "reader", "runner", "driver",
    ]
    return {
        "positive": positive,
        "rest": function + neutral + negative + filler,
        "tags": sorted(set(neutral + filler))[:160],
    }


def _bot_contact_profile(rng: np.random.Generator) -> tuple[tuple[float, float], float, float]:
    lo = rng.uniform(3, 30)
    return (lo, lo + rng.uniform(40, 700)), rng.uniform(3.0, 4.8), rng.uniform(0.4, 0.9)


def _human_contact_profile(rng: np.random.Generator) -> tuple[tuple[float, float], float, float]:
    lo = rng.uniform(20, 200)
    return (lo, lo + rng.uniform(300, 2800)), rng.uniform(3.8, 6.0), rng.uniform(0.8, 1.6)


def _contact_doc(rng: np.random.Generator, user_id: int,
                 profile: tuple[tuple[float, float], float, float]) -> dict:
    (age_lo, age_hi), mu, sigma = profile
    age_days = rng.uniform(age_lo, age_hi)
    return {
        "user_id": str(user_id),
        "followers_count": int(rng.lognormal(mu, sigma)),
        "friends_count": int(rng.lognormal(5.0, 1.0)),
        "statuses_count": int(rng.lognormal(6.5, 1.4)),
        "created_at": format_timestamp(int(CAPTURED_AT - age_days * _DAY)),
    }


def _diurnal_shift(ts: float, sleep_start_h: float, sleep_len_h: float) -> float:
    """Move a timestamp backward out of the account's nightly quiet window."""
    day_pos = ts % _DAY
    start = (sleep_start_h * 3600.0) % _DAY
    end = (start + sleep_len_h * 3600.0) % _DAY
    if start < end:
        inside = start <= day_pos < end
        back = day_pos - start
    else:
        inside = day_pos >= start or day_pos < end
        back = day_pos - start if day_pos >= start else day_pos + _DAY - start
    return ts - back - 1.0 if inside else ts


class _Generator:
    def __init__(self, params: SynthParams):
        self.params = params
        self.rng = np.random.default_rng(params.seed)
        self.pools = _word_pools()
        self.emoticons_pos = [":)", ":D", "<3", ";)"]
        self.emoticons_neg = [":(", ":/", "D:"]

    def _text(self, word_list: list[str], n_words: int) -> str:
        idx = self.rng.integers(0, len(word_list), size=n_words)
        return " ".join(word_list[i] for i in idx)

    def _tweet_len(self, mu: float) -> int:
        return max(2, int(round(self.rng.normal(mu, 0.35 * mu))))

    def _account_vocab(self, tone: float, size: int) -> list[str]:
        """Word pool for one account; tone = share drawn from high-pleasantness words."""
        rng = self.rng
        pos, rest = self.pools["positive"], self.pools["rest"]
        pick_pos = rng.random(size) < tone
        pos_idx = rng.integers(0, len(pos), size=size)
        rest_idx = rng.integers(0, len(rest), size=size)
        return [pos[pos_idx[i]] if pick_pos[i] else rest[rest_idx[i]] for i in range(size)]

    def _tweet_doc(self, author_id: str, ts: int, text: str, hashtags: list[str],
                   mentioned: list[tuple[str, str]], url_count: int,
                   retweeted: dict | None, is_reply: bool) -> dict:
        rng = self.rng
        return {
            "tweet_id": str(rng.integers(10**12, 10**13)),
            "author_id": author_id,
            "created_at": format_timestamp(ts),
            "text": text,
            "hashtags": hashtags,
            "mentioned_users": [{"user_id": uid, "screen_name": name} for uid, name in mentioned],
            "url_count": url_count,
            "is_retweet": retweeted is not None,
            "retweeted_author": retweeted,
            "is_reply": is_reply,
            "retweet_count": int(rng.integers(0, 25)),
            "favorite_count": int(rng.integers(0, 60)),
            "source_client": "web",
        }

    def _user_doc(self, idx: int, age_days: float, followers: int, friends: int,
                  statuses: int, description_words: int, word_list: list[str],
                  default_profile_p: float, url_p: float, location_p: float) -> dict:
        rng = self.rng
        return {
            "user_id": str(1_000_000 + idx),
            "screen_name": f"acct{idx:05d}",
            "display_name": self._text(self.pools["rest"], int(rng.integers(1, 4))).title(),
            "description": self._text(word_list, description_words),
            "language": str(rng.choice(["en"] * 8 + ["es", "fr", "de", "pt"])),
            "location": "city center" if rng.random() < location_p else "",
            "url_present": bool(rng.random() < url_p),
            "created_at": format_timestamp(int(CAPTURED_AT - age_days * _DAY)),
            "followers_count": followers,
            "friends_count": friends,
            "statuses_count": statuses,
            "listed_count": int(rng.integers(0, 40)),
            "favourites_count": int(rng.lognormal(4.0, 1.8)),
            "verified": bool(rng.random() < 0.02),
            "default_profile": bool(rng.random() < default_profile_p),
        }

    def _mention_docs(self, idx: int, n_mentions: int, ego_id: str, ego_name: str,
                      meta_p: float, profile) -> list[dict]:
        rng = self.rng
        docs = []
        times = np.sort(rng.uniform(CAPTURED_AT - 60 * _DAY, CAPTURED_AT - 60, size=n_mentions))
        for ts in times:
            author_id = int(7_000_000 + rng.integers(0, 500_000))
            meta = None
            if rng.random() < meta_p:
                meta = _contact_doc(rng, author_id, profile)
            text = f"@{ego_name} " + self._text(self.pools["rest"], int(rng.integers(3, 14)))
            doc = self._tweet_doc(
                str(author_id), int(ts), text, [], [(ego_id, ego_name)],
                url_count=0, retweeted=None, is_reply=bool(rng.random() < 0.5),
            )
            if meta is not None:
                doc["author_meta"] = meta
            docs.append(doc)
        return docs

    def bot_snapshot(self, idx: int) -> AccountSnapshot:
        rng = self.rng
        p = self.params.bot
        stealth = rng.random() < p.stealth_fraction

        base = np.exp(rng.uniform(np.log(p.base_interval_s[0]), np.log(p.base_interval_s[1])))
        jitter = rng.uniform(*p.interval_jitter)
        n_tweets = int(rng.integers(50, 201))
        if stealth:
            gaps = rng.lognormal(np.log(base), rng.uniform(0.5, 0.9), size=n_tweets)
        else:
            gaps = base * (1.0 + jitter * rng.uniform(-1.0, 1.0, size=n_tweets))
            # rare scheduler outages: long silences between metronomic runs
            outage = rng.random(n_tweets) < 0.04
            gaps[outage] *= rng.uniform(20.0, 200.0, size=int(outage.sum()))

        age_days = rng.uniform(*p.age_days)
        created_at = CAPTURED_AT - age_days * _DAY

        wlen_mu = rng.uniform(*p.words_per_tweet)
        n_templates = int(rng.integers(*p.template_pool))
        vocab = self._account_vocab(tone=rng.uniform(0.35, 0.9), size=120)
        templates = [self._text(vocab, self._tweet_len(wlen_mu)) for _ in range(n_templates)]
        duplicate_rate = rng.uniform(*p.duplicate_rate)
        emoticon = str(rng.choice(self.emoticons_pos))
        emoticon_rate = rng.uniform(*p.emoticon_rate)
        hashtag_rate = rng.uniform(*p.hashtag_rate)
        tag_pool = list(rng.choice(self.pools["tags"], size=int(rng.integers(2, 7)), replace=False))
        reply_rate = rng.uniform(*p.reply_rate)
        mention_extra = rng.uniform(0.0, 0.2)
        url_rate = rng.uniform(*p.url_rate)

        contact_profile = _bot_contact_profile(rng)
        n_targets = int(rng.integers(1, 4))
        targets = [
            _contact_doc(rng, 6_000_000 + int(rng.integers(0, 200_000)), contact_profile)
            for _ in range(n_targets)
        ]
        retweet_rate = rng.uniform(0.15, 0.6)

        tweets = []
        ts = float(CAPTURED_AT - rng.uniform(60, 7200))
        for i in range(n_tweets):
            if ts < created_at + 3600:
                break
            if rng.random() < duplicate_rate:
                text = templates[int(rng.integers(0, n_templates))]
            else:
                text = self._text(vocab, self._tweet_len(wlen_mu))
            if rng.random() < emoticon_rate:
                text = f"{text} {emoticon}"
            k = min(5, rng.poisson(hashtag_rate))
            tags = list(rng.choice(tag_pool, size=k)) if k else []
            retweeted = targets[int(rng.integers(0, n_targets))] if rng.random() < retweet_rate else None
            is_reply = bool(rng.random() < reply_rate)
            mentioned = []
            if is_reply or rng.random() < mention_extra:
                peer = 7_500_000 + int(rng.integers(0, 1000))
                mentioned = [(str(peer), f"peer{peer}")]
            tweets.append(self._tweet_doc(
                str(1_000_000 + idx), int(ts), text, tags, mentioned,
                url_count=int(rng.random() < url_rate), retweeted=retweeted, is_reply=is_reply,
            ))
            ts -= gaps[i]

        followers = int(rng.lognormal(3.2, 1.0))
        friends = int(rng.lognormal(6.3, 0.8))
        statuses = int(age_days * rng.uniform(10, 400))
        contacts = [
            _contact_doc(rng, 5_000_000 + int(rng.integers(0, 10**6)), contact_profile)
            for _ in range(int(rng.integers(8, 26)))
        ]
        doc = {
            "user": self._user_doc(
                idx, age_days, followers, friends, statuses,
                description_words=int(rng.integers(3, 13)),
                word_list=vocab,
                default_profile_p=0.6, url_p=0.55, location_p=0.25,
            ),
            "tweets": tweets,
            "mentions": self._mention_docs(
                idx, int(rng.integers(0, 26)), str(1_000_000 + idx), f"acct{idx:05d}",
                meta_p=0.7, profile=contact_profile,
            ),
            "contacts": contacts,
            "captured_at": format_timestamp(CAPTURED_AT),
        }
        return snapshot_from_document(doc)

    def human_snapshot(self, idx: int) -> AccountSnapshot:
        rng = self.rng
        p = self.params.human
        power = rng.random() < p.power_fraction

        base = np.exp(rng.uniform(np.log(p.base_gap_s[0]), np.log(p.base_gap_s[1])))
        sigma = rng.uniform(*p.gap_sigma)
        n_tweets = int(rng.integers(30, 181))
        if power:
            base = rng.uniform(600, 3000)
            gaps = base * (1.0 + rng.uniform(0.1, 0.35) * rng.uniform(-1.0, 1.0, size=n_tweets))
        else:
            gaps = rng.lognormal(np.log(base), sigma, size=n_tweets)

        age_days = rng.uniform(*p.age_days)
        created_at = CAPTURED_AT - age_days * _DAY
        sleep_start = rng.uniform(21.5, 26.0)
        sleep_len = rng.uniform(6.0, 9.0)

        wlen_mu = rng.uniform(*p.words_per_tweet)
        vocab_size = int(rng.integers(*p.vocabulary))
        vocab = self._account_vocab(tone=rng.uniform(0.15, 0.7), size=vocab_size)
        hashtag_rate = rng.uniform(*p.hashtag_rate)
        tag_pool = list(rng.choice(self.pools["tags"], size=int(rng.integers(5, 31)), replace=False))
        reply_rate = rng.uniform(*p.reply_rate)
        mention_extra = rng.uniform(0.05, 0.35)
        emoticon_rate = rng.uniform(*p.emoticon_rate)
        url_rate = rng.uniform(*p.url_rate)
        retweet_rate = rng.uniform(0.05, 0.4)
        contact_profile = _human_contact_profile(rng)
        n_targets = int(rng.integers(5, 31))
        targets = [
            _contact_doc(rng, 6_500_000 + int(rng.integers(0, 500_000)), contact_profile)
            for _ in range(n_targets)
        ]

        tweets = []
        ts = float(CAPTURED_AT - rng.uniform(60, 4 * 3600))
        for i in range(n_tweets):
            ts = _diurnal_shift(ts, sleep_start, sleep_len) if not power else ts
            if ts < created_at + 3600:
                break
            text = self._text(vocab, self._tweet_len(wlen_mu))
            if rng.random() < emoticon_rate:
                emo_pool = self.emoticons_pos if rng.random() < 0.65 else self.emoticons_neg
                text = f"{text} {emo_pool[int(rng.integers(0, len(emo_pool)))]}"
            k = min(5, rng.poisson(hashtag_rate))
            tags = list(rng.choice(tag_pool, size=k)) if k else []
            retweeted = targets[int(rng.integers(0, n_targets))] if rng.random() < retweet_rate else None
            is_reply = bool(rng.random() < reply_rate)
            mentioned = []
            if is_reply or rng.random() < mention_extra:
                peer = 7_600_000 + int(rng.integers(0, 50_000))
                mentioned = [(str(peer), f"peer{peer}")]
            tweets.append(self._tweet_doc(
                str(1_000_000 + idx), int(ts), text, tags, mentioned,
                url_count=int(rng.random() < url_rate), retweeted=retweeted, is_reply=is_reply,
            ))
            ts -= gaps[i]

        followers = int(rng.lognormal(5.3, 1.2))
        friends = int(rng.lognormal(5.0, 0.9))
        statuses = int(age_days * rng.uniform(0.3, 40))
        contacts = [
            _contact_doc(rng, 5_500_000 + int(rng.integers(0, 10**6)), contact_profile)
            for _ in range(int(rng.integers(10, 41)))
        ]
        doc = {
            "user": self._user_doc(
                idx, age_days, followers, friends, statuses,
                description_words=int(rng.integers(0, 26)),
                word_list=vocab,
                default_profile_p=0.25, url_p=0.35, location_p=0.6,
            ),
            "tweets": tweets,
            "mentions": self._mention_docs(
                idx, int(rng.integers(2, 61)), str(1_000_000 + idx), f"acct{idx:05d}",
                meta_p=0.7, profile=contact_profile,
            ),
            "contacts": contacts,
            "captured_at": format_timestamp(CAPTURED_AT),
        }
        return snapshot_from_document(doc)


def generate_corpus(params: SynthParams) -> LabeledCorpus:
    """Deterministic labeled corpus: bots first, then humans."""
    gen = _Generator(params)
    items: list[tuple[AccountSnapshot, int]] = []
    for i in range(params.n_bots):
        items.append((gen.bot_snapshot(i), BOT_LABEL))
    for i in range(params.n_humans):
        items.append((gen.human_snapshot(params.n_bots + i), HUMAN_LABEL))

    bots_payload = _payload(items, BOT_LABEL)
    humans_payload = _payload(items, HUMAN_LABEL)
    return LabeledCorpus(items=tuple(items), digest=corpus_digest(bots_payload, humans_payload))


def _payload(items, label: int) -> bytes:
    lines = [serialize_snapshot(s) for s, lab in items if lab == label]
    return ("\n".join(lines) + "\n").encode("utf-8") if lines else b""
