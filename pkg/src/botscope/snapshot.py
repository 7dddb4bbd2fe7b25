"""Canonical account-snapshot model: parsing, validation, serialization.

The snapshot document is the single wire format used by the scoring API,
fixture files, and corpus files. Timestamps are ISO-8601 strings on the wire
and UTC integer seconds in memory; all downstream math uses seconds.
"""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass, replace
from datetime import datetime, timezone
from typing import Any

from .errors import ParseError, SchemaError

TWEET_CAP = 200
MENTION_CAP = 100

_REQUIRED = object()


class TruncationWarning(UserWarning):
    """An over-cap tweet or mention list was truncated to the newest items."""


@dataclass(frozen=True)
class ContactMeta:
    """Count metadata for one social contact."""

    user_id: str
    followers_count: int
    friends_count: int
    statuses_count: int
    created_at: int


@dataclass(frozen=True)
class UserMeta:
    """Profile metadata for the scored account."""

    user_id: str
    screen_name: str
    display_name: str
    description: str
    language: str
    location: str
    url_present: bool
    created_at: int
    followers_count: int
    friends_count: int
    statuses_count: int
    listed_count: int
    favourites_count: int
    verified: bool
    default_profile: bool


@dataclass(frozen=True)
class Tweet:
    tweet_id: str
    author_id: str
    created_at: int
    text: str
    hashtags: tuple[str, ...]
    mentioned_users: tuple[tuple[str, str], ...]
    url_count: int
    is_retweet: bool
    retweeted_author: ContactMeta | None
    is_reply: bool
    retweet_count: int
    favorite_count: int
    source_client: str
    # Mention tweets may embed their author's metadata; absent is fine.
    author_meta: ContactMeta | None = None


@dataclass(frozen=True)
class AccountSnapshot:
    """One account's recent activity: the unit of scoring.

    Tweets are newest-first and capped at 200; mentions (tweets by others
    that mention this account) are capped at 100.
    """

    user: UserMeta
    tweets: tuple[Tweet, ...]
    mentions: tuple[Tweet, ...]
    contacts: tuple[ContactMeta, ...]
    captured_at: int


def parse_timestamp(value: Any, field: str = "timestamp") -> int:
    """Accept an ISO-8601 string or integer seconds; return UTC integer seconds."""
    if isinstance(value, bool):
        raise SchemaError(f"{field}: expected a timestamp, got a boolean", field)
    if isinstance(value, (int, float)):
        return int(value)
    if isinstance(value, str):
        text = value.strip()
        if text.endswith(("Z", "z")):
            text = text[:-1] + "+00:00"
        try:
            dt = datetime.fromisoformat(text)
        except ValueError as exc:
            raise SchemaError(f"{field}: bad timestamp {value!r}: {exc}", field) from None
        if dt.tzinfo is None:
            dt = dt.replace(tzinfo=timezone.utc)
        return int(dt.timestamp())
    raise SchemaError(f"{field}: expected a timestamp, got {type(value).__name__}", field)


def format_timestamp(ts: int) -> str:
    return datetime.fromtimestamp(int(ts), tz=timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")


def _get(obj: dict, key: str, path: str, default: Any = _REQUIRED) -> Any:
    if key in obj and obj[key] is not None:
        return obj[key]
    if default is _REQUIRED:
        raise SchemaError(f"missing required field {path}.{key}", f"{path}.{key}")
    return default


def _get_str(obj: dict, key: str, path: str, default: Any = _REQUIRED) -> str:
    value = _get(obj, key, path, default)
    if not isinstance(value, str):
        raise SchemaError(f"{path}.{key}: expected a string", f"{path}.{key}")
    return value


def _get_count(obj: dict, key: str, path: str, default: Any = _REQUIRED) -> int:
    value = _get(obj, key, path, default)
    if isinstance(value, bool) or not isinstance(value, int):
        raise SchemaError(f"{path}.{key}: expected an integer count", f"{path}.{key}")
    if value < 0:
        raise SchemaError(f"{path}.{key}: count must be >= 0, got {value}", f"{path}.{key}")
    return value


def _get_bool(obj: dict, key: str, path: str, default: Any = _REQUIRED) -> bool:
    value = _get(obj, key, path, default)
    if not isinstance(value, bool):
        raise SchemaError(f"{path}.{key}: expected a boolean", f"{path}.{key}")
    return value


def _parse_contact(obj: Any, path: str) -> ContactMeta:
    if not isinstance(obj, dict):
        raise SchemaError(f"{path}: expected an object", path)
    return ContactMeta(
        user_id=str(_get(obj, "user_id", path)),
        followers_count=_get_count(obj, "followers_count", path),
        friends_count=_get_count(obj, "friends_count", path),
        statuses_count=_get_count(obj, "statuses_count", path),
        created_at=parse_timestamp(_get(obj, "created_at", path), f"{path}.created_at"),
    )


def _parse_tweet(obj: Any, path: str) -> Tweet:
    if not isinstance(obj, dict):
        raise SchemaError(f"{path}: expected an object", path)
    hashtags: list[str] = []
    seen = set()
    raw_tags = _get(obj, "hashtags", path, default=[])
    if not isinstance(raw_tags, list):
        raise SchemaError(f"{path}.hashtags: expected a list", f"{path}.hashtags")
    for tag in raw_tags:
        low = str(tag).lower()
        if low and low not in seen:
            seen.add(low)
            hashtags.append(low)

    mentioned: list[tuple[str, str]] = []
    raw_mentions = _get(obj, "mentioned_users", path, default=[])
    if not isinstance(raw_mentions, list):
        raise SchemaError(f"{path}.mentioned_users: expected a list", f"{path}.mentioned_users")
    for i, m in enumerate(raw_mentions):
        if not isinstance(m, dict):
            raise SchemaError(f"{path}.mentioned_users[{i}]: expected an object", f"{path}.mentioned_users")
        mentioned.append((str(_get(m, "user_id", f"{path}.mentioned_users[{i}]")),
                          str(_get(m, "screen_name", f"{path}.mentioned_users[{i}]"))))

    raw_author = obj.get("retweeted_author")
    retweeted_author = _parse_contact(raw_author, f"{path}.retweeted_author") if raw_author is not None else None
    is_retweet = obj.get("is_retweet")
    if is_retweet is None:
        is_retweet = retweeted_author is not None
    elif not isinstance(is_retweet, bool):
        raise SchemaError(f"{path}.is_retweet: expected a boolean", f"{path}.is_retweet")
    if is_retweet != (retweeted_author is not None):
        raise SchemaError(
            f"{path}: is_retweet={is_retweet} contradicts retweeted_author presence", f"{path}.is_retweet"
        )

    raw_meta = obj.get("author_meta")
    author_meta = _parse_contact(raw_meta, f"{path}.author_meta") if raw_meta is not None else None

    return Tweet(
        tweet_id=str(_get(obj, "tweet_id", path)),
        author_id=str(_get(obj, "author_id", path)),
        created_at=parse_timestamp(_get(obj, "created_at", path), f"{path}.created_at"),
        text=_get_str(obj, "text", path),
        hashtags=tuple(hashtags),
        mentioned_users=tuple(mentioned),
        url_count=_get_count(obj, "url_count", path, default=0),
        is_retweet=is_retweet,
        retweeted_author=retweeted_author,
        is_reply=_get_bool(obj, "is_reply", path, default=False),
        retweet_count=_get_count(obj, "retweet_count", path, default=0),
        favorite_count=_get_count(obj, "favorite_count", path, default=0),
        source_client=_get_str(obj, "source_client", path, default=""),
        author_meta=author_meta,
    )


def _parse_user(obj: Any, captured_at: int) -> UserMeta:
    if not isinstance(obj, dict):
        raise SchemaError("user: expected an object", "user")
    screen_name = _get_str(obj, "screen_name", "user")
    if not screen_name:
        raise SchemaError("user.screen_name must be nonempty", "user.screen_name")
    created_at = parse_timestamp(_get(obj, "created_at", "user"), "user.created_at")
    if created_at > captured_at:
        raise SchemaError("user.created_at is after captured_at", "user.created_at")
    return UserMeta(
        user_id=str(_get(obj, "user_id", "user")),
        screen_name=screen_name,
        display_name=_get_str(obj, "display_name", "user", default=""),
        description=_get_str(obj, "description", "user", default=""),
        language=_get_str(obj, "language", "user", default="").lower(),
        location=_get_str(obj, "location", "user", default=""),
        url_present=_get_bool(obj, "url_present", "user", default=False),
        created_at=created_at,
        followers_count=_get_count(obj, "followers_count", "user"),
        friends_count=_get_count(obj, "friends_count", "user"),
        statuses_count=_get_count(obj, "statuses_count", "user"),
        listed_count=_get_count(obj, "listed_count", "user", default=0),
        favourites_count=_get_count(obj, "favourites_count", "user", default=0),
        verified=_get_bool(obj, "verified", "user", default=False),
        default_profile=_get_bool(obj, "default_profile", "user", default=False),
    )


def snapshot_from_document(doc: Any) -> AccountSnapshot:
    """Validate a decoded snapshot document and build an AccountSnapshot.

    Over-cap tweet/mention lists are truncated to the newest 200/100 items
    with a TruncationWarning; schema violations raise SchemaError.
    """
    if not isinstance(doc, dict):
        raise SchemaError("snapshot document must be a JSON object")
    captured_at = parse_timestamp(_get(doc, "captured_at", "snapshot"), "captured_at")
    user = _parse_user(_get(doc, "user", "snapshot"), captured_at)

    raw_tweets = _get(doc, "tweets", "snapshot", default=[])
    if not isinstance(raw_tweets, list):
        raise SchemaError("tweets: expected a list", "tweets")
    tweets = [_parse_tweet(t, f"tweets[{i}]") for i, t in enumerate(raw_tweets)]
    tweets.sort(key=lambda t: t.created_at, reverse=True)
    if len(tweets) > TWEET_CAP:
        warnings.warn(
            f"tweet list has {len(tweets)} items; keeping the newest {TWEET_CAP}", TruncationWarning
        )
        tweets = tweets[:TWEET_CAP]

    raw_mentions = _get(doc, "mentions", "snapshot", default=[])
    if not isinstance(raw_mentions, list):
        raise SchemaError("mentions: expected a list", "mentions")
    mentions = [_parse_tweet(t, f"mentions[{i}]") for i, t in enumerate(raw_mentions)]
    for i, m in enumerate(mentions):
        if m.author_id == user.user_id:
            raise SchemaError(f"mentions[{i}]: authored by the scored account", "mentions")
    mentions.sort(key=lambda t: t.created_at, reverse=True)
    if len(mentions) > MENTION_CAP:
        warnings.warn(
            f"mention list has {len(mentions)} items; keeping the newest {MENTION_CAP}", TruncationWarning
        )
        mentions = mentions[:MENTION_CAP]

    raw_contacts = _get(doc, "contacts", "snapshot", default=[])
    if not isinstance(raw_contacts, list):
        raise SchemaError("contacts: expected a list", "contacts")
    contacts = [_parse_contact(c, f"contacts[{i}]") for i, c in enumerate(raw_contacts)]

    return AccountSnapshot(
        user=user,
        tweets=tuple(tweets),
        mentions=tuple(mentions),
        contacts=tuple(contacts),
        captured_at=captured_at,
    )


def parse_snapshot(document: str) -> AccountSnapshot:
    """Parse a snapshot JSON document (UTF-8 text) into a validated AccountSnapshot."""
    try:
        doc = json.loads(document)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed snapshot document: {exc}") from None
    return snapshot_from_document(doc)


def _contact_to_document(c: ContactMeta) -> dict:
    return {
        "user_id": c.user_id,
        "followers_count": c.followers_count,
        "friends_count": c.friends_count,
        "statuses_count": c.statuses_count,
        "created_at": format_timestamp(c.created_at),
    }


def _tweet_to_document(t: Tweet) -> dict:
    doc = {
        "tweet_id": t.tweet_id,
        "author_id": t.author_id,
        "created_at": format_timestamp(t.created_at),
        "text": t.text,
        "hashtags": list(t.hashtags),
        "mentioned_users": [{"user_id": uid, "screen_name": name} for uid, name in t.mentioned_users],
        "url_count": t.url_count,
        "is_retweet": t.is_retweet,
        "retweeted_author": _contact_to_document(t.retweeted_author) if t.retweeted_author else None,
        "is_reply": t.is_reply,
        "retweet_count": t.retweet_count,
        "favorite_count": t.favorite_count,
        "source_client": t.source_client,
    }
    if t.author_meta is not None:
        doc["author_meta"] = _contact_to_document(t.author_meta)
    return doc


def snapshot_to_document(s: AccountSnapshot) -> dict:
    u = s.user
    return {
        "user": {
            "user_id": u.user_id,
            "screen_name": u.screen_name,
            "display_name": u.display_name,
            "description": u.description,
            "language": u.language,
            "location": u.location,
            "url_present": u.url_present,
            "created_at": format_timestamp(u.created_at),
            "followers_count": u.followers_count,
            "friends_count": u.friends_count,
            "statuses_count": u.statuses_count,
            "listed_count": u.listed_count,
            "favourites_count": u.favourites_count,
            "verified": u.verified,
            "default_profile": u.default_profile,
        },
        "tweets": [_tweet_to_document(t) for t in s.tweets],
        "mentions": [_tweet_to_document(t) for t in s.mentions],
        "contacts": [_contact_to_document(c) for c in s.contacts],
        "captured_at": format_timestamp(s.captured_at),
    }


def serialize_snapshot(s: AccountSnapshot) -> str:
    return json.dumps(snapshot_to_document(s), ensure_ascii=False)


def derive_contacts(snapshot: AccountSnapshot) -> tuple[ContactMeta, ...]:
    """Union of embedded contacts, retweeted authors, and mention-author metadata.

    Deduplicated by user_id keeping the most recently observed metadata:
    retweet/mention embeddings are dated by their tweet, the explicit
    contact list by captured_at. Output is sorted by user_id.
    """
    observed: dict[str, tuple[int, ContactMeta]] = {}

    def record(meta: ContactMeta | None, observed_at: int) -> None:
        if meta is None:
            return
        prev = observed.get(meta.user_id)
        if prev is None or observed_at >= prev[0]:
            observed[meta.user_id] = (observed_at, meta)

    for tweet in sorted(snapshot.tweets, key=lambda t: t.created_at):
        record(tweet.retweeted_author, tweet.created_at)
    for mention in sorted(snapshot.mentions, key=lambda t: t.created_at):
        record(mention.author_meta, mention.created_at)
    for contact in snapshot.contacts:
        record(contact, snapshot.captured_at)

    return tuple(meta for _, meta in sorted(
        (entry for entry in observed.values()), key=lambda pair: pair[1].user_id
    ))
