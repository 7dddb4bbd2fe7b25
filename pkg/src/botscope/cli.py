"""Operator command line: generate, train, evaluate, score, inspect, serve.

Exit codes: 0 success, 1 usage error, 2 data error, 3 internal error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time

from .config import load_config
from .errors import (
    BotscopeError,
    EmptyStore,
    InsufficientData,
    LexiconError,
    MissingFile,
    NotFound,
    ParseError,
    RegistryMismatch,
    SchemaError,
    SingleClassError,
    StorageError,
    TooFewSamples,
    UpstreamError,
)
from .features import build_registry, extract_all
from .forest import ForestParams, load_suite, save_suite, score_suite, train_suite
from .ingest import FixtureSource, fetch_account, load_corpus, save_corpus
from .snapshot import format_timestamp, parse_snapshot
from .store import ScoreStore, normalize_key

_DATA_ERRORS = (
    MissingFile, ParseError, SchemaError, NotFound, UpstreamError, TooFewSamples,
    SingleClassError, EmptyStore, StorageError, LexiconError, InsufficientData,
    RegistryMismatch,
)


def _emit(doc, fmt: str = "json") -> None:
    if fmt == "json":
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        for key, value in doc.items():
            print(f"{key}: {value}")


def _forest_params(args) -> ForestParams:
    return ForestParams(
        n_trees=args.trees,
        max_features=args.max_features,
        min_samples_leaf=args.min_leaf,
        max_depth=args.max_depth,
        bootstrap=not args.no_bootstrap,
        rng_seed=args.seed,
    )


def _add_forest_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--trees", type=int, default=100)
    p.add_argument("--max-features", type=int, default=None)
    p.add_argument("--min-leaf", type=int, default=1)
    p.add_argument("--max-depth", type=int, default=None)
    p.add_argument("--no-bootstrap", action="store_true")


def _cmd_synth(args) -> int:
    from .synth import SynthParams, generate_corpus

    params = SynthParams(seed=args.seed, n_bots=args.bots, n_humans=args.humans)
    corpus = generate_corpus(params)
    out = save_corpus(corpus, args.out)
    _emit({
        "seed": args.seed,
        "bots": args.bots,
        "humans": args.humans,
        "dataset_digest": corpus.digest,
        "out": str(out),
    }, args.format)
    return 0


def _cmd_train(args) -> int:
    from .features import extract_matrix
    import numpy as np

    corpus = load_corpus(args.corpus)
    registry = build_registry()
    snapshots = [snap for snap, _ in corpus.items]
    y = np.array([label for _, label in corpus.items], dtype=np.int8)
    trained_at = format_timestamp(int(time.time())) if args.stamp_time else None
    suite = train_suite(
        extract_matrix(snapshots, registry), y, _forest_params(args), registry,
        dataset_digest=corpus.digest, trained_at=trained_at,
    )
    save_suite(suite, args.model)
    from .service import model_version_digest
    _emit({
        "seed": args.seed,
        "model": args.model,
        "model_version": model_version_digest(suite),
        "dataset_digest": corpus.digest,
        "accounts": len(corpus.items),
        "trained_at": trained_at,
    }, args.format)
    return 0


def _cmd_crossval(args) -> int:
    from .evaluation import cross_validate

    corpus = load_corpus(args.corpus)
    report = cross_validate(corpus, _forest_params(args), k=args.k, seed=args.seed)
    _emit(report.as_dict(), args.format)
    return 0


def _score_snapshot_doc(args, snapshot) -> dict:
    suite = load_suite(args.model)
    vector = extract_all(snapshot)
    scores = score_suite(suite, vector)
    from .service import model_version_digest

    digest = model_version_digest(suite)
    now = int(time.time())
    if args.store:
        with ScoreStore(args.store) as store:
            store.record(normalize_key(snapshot.user.screen_name), scores, digest, now)
    return {
        "screen_name": snapshot.user.screen_name,
        "user_id": snapshot.user.user_id,
        "scores": scores,
        "meta": {
            "tweets_used": len(snapshot.tweets),
            "mentions_used": len(snapshot.mentions),
            "model_version": digest,
            "timestamp": format_timestamp(now),
        },
    }


def _cmd_score(args) -> int:
    if (args.snapshot is None) == (args.name is None):
        print("score: pass exactly one of --snapshot or --name", file=sys.stderr)
        return 1
    if args.snapshot is not None:
        try:
            with open(args.snapshot, "r", encoding="utf-8") as fh:
                snapshot = parse_snapshot(fh.read())
        except OSError as exc:
            raise MissingFile(f"cannot read snapshot {args.snapshot}: {exc}") from exc
    else:
        if not args.fixtures:
            print("score --name requires --fixtures", file=sys.stderr)
            return 1
        snapshot = fetch_account(FixtureSource(args.fixtures), args.name)
    _emit(_score_snapshot_doc(args, snapshot), args.format)
    return 0


def _cmd_features(args) -> int:
    registry = build_registry()
    if args.manifest:
        rows = registry.manifest_rows()
        if args.format == "csv":
            _print_csv(("name", "feature_class", "params", "description"), rows)
        else:
            _emit({"registry_digest": registry.digest,
                   "features": [dict(zip(("name", "feature_class", "params", "description"), r))
                                for r in rows]}, "json")
        return 0
    if not args.snapshot:
        print("features: pass --snapshot or --manifest", file=sys.stderr)
        return 1
    try:
        with open(args.snapshot, "r", encoding="utf-8") as fh:
            snapshot = parse_snapshot(fh.read())
    except OSError as exc:
        raise MissingFile(f"cannot read snapshot {args.snapshot}: {exc}") from exc
    vector = extract_all(snapshot, registry=registry)
    named = vector.as_dict(registry)
    if args.format == "csv":
        _print_csv(("name", "value"), [(k, repr(v)) for k, v in named.items()])
    else:
        _emit({"registry_digest": registry.digest, "screen_name": snapshot.user.screen_name,
               "features": {k: (None if v != v else v) for k, v in named.items()}}, "json")
    return 0


def _print_csv(header, rows) -> None:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(header)
    writer.writerows(rows)
    sys.stdout.write(buf.getvalue())


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import app_from_config

    config = load_config(args.config)
    if args.host:
        config = _override(config, host=args.host)
    if args.port:
        config = _override(config, port=args.port)
    if args.model:
        config = _override(config, model_path=args.model)
    if args.store:
        config = _override(config, store_path=args.store)
    if args.fixtures:
        config = _override(config, source_kind="fixture", source_root=args.fixtures)
    app = app_from_config(config)
    uvicorn.run(app, host=config.host, port=config.port, log_level="warning")
    return 0


def _override(config, **kwargs):
    from dataclasses import replace

    return replace(config, **kwargs)


def _cmd_stats(args) -> int:
    if args.stats_cmd != "cdf":
        print("stats: unknown subcommand", file=sys.stderr)
        return 1
    with ScoreStore(args.store) as store:
        points = store.score_cdf(args.bins)
        doc = {
            "bins": args.bins,
            "unique_accounts": store.unique_accounts,
            "points": [[x, y] for x, y in points],
        }
    if args.format == "csv":
        _print_csv(("score", "cumulative_fraction"), [(repr(x), repr(y)) for x, y in points])
    else:
        _emit(doc, "json")
    return 0


def _cmd_compact(args) -> int:
    with ScoreStore(args.store) as store:
        kept = store.compact()
        doc = {"store": args.store, "records_kept": kept,
               "unique_accounts": store.unique_accounts}
    _emit(doc, args.format)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="botscope")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("synth", help="generate a labeled synthetic corpus")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--bots", type=int, default=10)
    p.add_argument("--humans", type=int, default=10)
    p.add_argument("--out", required=True)
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=_cmd_synth)

    p = sub.add_parser("train", help="train a score suite from a corpus directory")
    p.add_argument("--corpus", required=True)
    p.add_argument("--model", required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--stamp-time", action="store_true")
    p.add_argument("--format", choices=("json", "text"), default="json")
    _add_forest_flags(p)
    p.set_defaults(func=_cmd_train)

    p = sub.add_parser("crossval", help="stratified k-fold evaluation")
    p.add_argument("--corpus", required=True)
    p.add_argument("--k", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("json", "text"), default="json")
    _add_forest_flags(p)
    p.set_defaults(func=_cmd_crossval)

    p = sub.add_parser("score", help="score one account")
    p.add_argument("--model", required=True)
    p.add_argument("--snapshot")
    p.add_argument("--name")
    p.add_argument("--fixtures")
    p.add_argument("--store")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=_cmd_score)

    p = sub.add_parser("features", help="named feature dump or registry manifest")
    p.add_argument("--snapshot")
    p.add_argument("--manifest", action="store_true")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=_cmd_features)

    p = sub.add_parser("serve", help="run the scoring service")
    p.add_argument("--config")
    p.add_argument("--host")
    p.add_argument("--port", type=int)
    p.add_argument("--model")
    p.add_argument("--store")
    p.add_argument("--fixtures")
    p.set_defaults(func=_cmd_serve)

    p = sub.add_parser("stats", help="datastore statistics")
    stats_sub = p.add_subparsers(dest="stats_cmd", required=True)
    c = stats_sub.add_parser("cdf", help="cumulative distribution of stored scores")
    c.add_argument("--store", required=True)
    c.add_argument("--bins", type=int, default=100)
    c.add_argument("--format", choices=("json", "csv"), default="json")
    c.set_defaults(func=_cmd_stats)

    p = sub.add_parser("compact", help="rewrite the store keeping latest per account")
    p.add_argument("--store", required=True)
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=_cmd_compact)

    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 1
    try:
        return args.func(args)
    except _DATA_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, BotscopeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except KeyboardInterrupt:
        return 130
    except Exception as exc:  # pragma: no cover - defensive
        print(f"internal error: {exc}", file=sys.stderr)
        return 3


def entrypoint() -> None:
    sys.exit(run(sys.argv[1:]))
