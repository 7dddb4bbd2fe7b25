"""HTTP scoring service.

Endpoints (all under /api/v1):
  GET  /score/{screen_name}  score an account fetched from the configured source
  POST /score                score a client-supplied snapshot document
  GET  /stats/cdf?bins=K     empirical CDF of stored overall scores
  GET  /health               liveness, build and model identifiers

Scoring endpoints share one fixed-window rate limit per caller key. The
datastore receives only the scored account's key, scores, model digest,
and timestamp; caller identifiers are never persisted.
"""

from __future__ import annotations

import hashlib
import time

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from . import __version__
from .config import ServiceConfig
from .errors import NotFound, ParseError, SchemaError, UpstreamError
from .features import build_registry, extract_all
from .forest import ScoreSuite, score_suite, suite_to_bytes
from .forest.backend import active_name
from .ingest import fetch_account
from .lexicons import load_default_lexicons
from .ratelimit import FixedWindowLimiter, RateDecision
from .snapshot import AccountSnapshot, format_timestamp, snapshot_from_document
from .store import ScoreStore, normalize_key


def model_version_digest(suite: ScoreSuite) -> str:
    return hashlib.sha256(suite_to_bytes(suite)).hexdigest()


def _error_body(code: str, message: str) -> dict:
    return {"error": {"code": code, "message": message}}


def _rate_headers(decision: RateDecision) -> dict[str, str]:
    return {
        "X-RateLimit-Limit": str(decision.limit),
        "X-RateLimit-Remaining": str(decision.remaining),
        "X-RateLimit-Reset": str(int(decision.reset_at)),
    }


def create_app(
    suite: ScoreSuite,
    store: ScoreStore,
    source=None,
    limiter: FixedWindowLimiter | None = None,
    clock=time.time,
    cors_origin: str = "*",
    key_mode: str = "header_or_host",
) -> FastAPI:
    registry = build_registry()
    if suite.registry_digest != registry.digest:
        raise SchemaError("model was trained against a different feature registry")
    lexicons = load_default_lexicons()
    limiter = limiter or FixedWindowLimiter()
    model_version = model_version_digest(suite)

    app = FastAPI(title="botscope", version=__version__, docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=[cors_origin],
        allow_methods=["GET", "POST"],
        allow_headers=["*"],
    )

    def caller_key(request: Request) -> str:
        host = request.client.host if request.client else "unknown"
        if key_mode == "header_or_host":
            return request.headers.get("x-api-key") or host
        return host

    def check_rate(request: Request) -> tuple[RateDecision, JSONResponse | None]:
        now = clock()
        decision = limiter.allow(caller_key(request), now)
        if decision.allowed:
            return decision, None
        retry = decision.retry_after(now)
        body = _error_body("rate_limited", "scoring quota exhausted for this window")
        body["retry_after"] = retry
        headers = _rate_headers(decision)
        headers["Retry-After"] = str(retry)
        return decision, JSONResponse(body, status_code=429, headers=headers)

    def build_report(snapshot: AccountSnapshot, detail: bool) -> dict:
        vector = extract_all(snapshot, registry=registry, lexicons=lexicons)
        scores = score_suite(suite, vector)
        now = int(clock())
        store.record(
            screen_name=normalize_key(snapshot.user.screen_name),
            scores=scores,
            model_digest=model_version,
            timestamp=now,
        )
        report = {
            "screen_name": snapshot.user.screen_name,
            "user_id": snapshot.user.user_id,
            "scores": scores,
            "meta": {
                "tweets_used": len(snapshot.tweets),
                "mentions_used": len(snapshot.mentions),
                "model_version": model_version,
                "timestamp": format_timestamp(now),
            },
        }
        if detail:
            times = sorted(t.created_at for t in snapshot.tweets)
            report["detail"] = {
                "inter_tweet_seconds": [int(b - a) for a, b in zip(times, times[1:])],
                "tweet_hours_utc": [int((t % 86400) // 3600) for t in times],
            }
        return report

    @app.exception_handler(RequestValidationError)
    async def _on_validation(request: Request, exc: RequestValidationError):
        return JSONResponse(_error_body("bad_request", str(exc.errors()[:1])), status_code=400)

    @app.exception_handler(Exception)
    async def _on_unexpected(request: Request, exc: Exception):
        return JSONResponse(_error_body("internal", "internal error"), status_code=500)

    @app.get("/api/v1/score/{screen_name}")
    def score_by_name(screen_name: str, request: Request, detail: int = 0):
        decision, denied = check_rate(request)
        if denied is not None:
            return denied
        if source is None:
            return JSONResponse(
                _error_body("no_source", "service has no account source configured"),
                status_code=503,
            )
        try:
            snapshot = fetch_account(source, screen_name)
        except NotFound as exc:
            return JSONResponse(_error_body("not_found", str(exc)), status_code=404)
        except UpstreamError as exc:
            return JSONResponse(_error_body("upstream", str(exc)), status_code=502)
        except (ParseError, SchemaError) as exc:
            return JSONResponse(_error_body("bad_upstream_data", str(exc)), status_code=502)
        report = build_report(snapshot, detail=bool(detail))
        return JSONResponse(report, headers=_rate_headers(decision))

    @app.post("/api/v1/score")
    def score_by_snapshot(document: dict, request: Request, detail: int = 0):
        decision, denied = check_rate(request)
        if denied is not None:
            return denied
        try:
            snapshot = snapshot_from_document(document)
        except (ParseError, SchemaError) as exc:
            return JSONResponse(_error_body("bad_request", str(exc)), status_code=400)
        report = build_report(snapshot, detail=bool(detail))
        return JSONResponse(report, headers=_rate_headers(decision))

    @app.get("/api/v1/stats/cdf")
    def stats_cdf(bins: int = 100):
        if bins < 1 or bins > 2000:
            return JSONResponse(
                _error_body("bad_request", "bins must be in [1, 2000]"), status_code=400
            )
        if store.unique_accounts == 0:
            return {"empty": True, "unique_accounts": 0}
        points = store.score_cdf(bins)
        return {
            "empty": False,
            "bins": bins,
            "unique_accounts": store.unique_accounts,
            "points": [[x, y] for x, y in points],
        }

    @app.get("/api/v1/health")
    def health():
        return {
            "status": "ok",
            "service_version": __version__,
            "model_version": model_version,
            "forest_backend": active_name(),
            "scored_accounts": store.unique_accounts,
        }

    return app


def app_from_config(config: ServiceConfig) -> FastAPI:
    """Wire a full app from file paths named in a ServiceConfig."""
    from .forest import load_suite
    from .ingest import FixtureSource, HttpSource

    suite = load_suite(config.model_path)
    store = ScoreStore(config.store_path)
    if config.source_kind == "http":
        source = HttpSource(base_url=config.source_url, token_env=config.source_token_env)
    else:
        source = FixtureSource(config.source_root)
    limiter = FixedWindowLimiter(limit=config.rate_limit, window_seconds=config.rate_window_seconds)
    return create_app(
        suite, store, source,
        limiter=limiter,
        cors_origin=config.cors_origin,
        key_mode=config.key_mode,
    )
