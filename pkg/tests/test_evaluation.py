from __future__ import annotations

import numpy as np
import pytest

from botscope.errors import SingleClassError, TooFewSamples
from botscope.evaluation import (
    CVReport,
    cross_validate,
    roc_auc,
    roc_curve,
    stratified_kfold,
    trapezoid_area,
)
from botscope.forest import ForestParams

from .oracles import pairwise_auc


def test_auc_hand_values():
    assert roc_auc([0.1, 0.2, 0.8, 0.9], [0, 0, 1, 1]) == 1.0
    assert roc_auc([0.9, 0.8, 0.2, 0.1], [0, 0, 1, 1]) == 0.0
    assert roc_auc([0.5, 0.5, 0.5, 0.5], [0, 1, 0, 1]) == 0.5
    # one discordant pair of four -> 0.75
    assert roc_auc([0.1, 0.8, 0.4, 0.9], [0, 0, 1, 1]) == 0.75


def test_auc_tie_half_credit():
    # one tied pair among two pos x two neg pairs
    assert roc_auc([0.3, 0.5, 0.5, 0.9], [0, 0, 1, 1]) == 0.875


def test_auc_single_class_raises():
    with pytest.raises(SingleClassError):
        roc_auc([0.1, 0.2], [1, 1])
    with pytest.raises(SingleClassError):
        roc_auc([0.1, 0.2], [0, 0])


def test_auc_matches_pairwise_bruteforce():
    rng = np.random.default_rng(1234)
    for trial in range(500):
        n = int(rng.integers(2, 201))
        labels = rng.integers(0, 2, size=n)
        if labels.min() == labels.max():
            labels[0] = 1 - labels[0]
        if rng.random() < 0.5:
            scores = rng.random(n)
        else:
            # coarse grid forces heavy ties
            scores = rng.integers(0, 5, size=n) / 4.0
        fast = roc_auc(scores, labels)
        slow = pairwise_auc(scores, labels)
        assert abs(fast - slow) <= 1e-12, f"trial {trial}: {fast} vs {slow}"


def test_roc_curve_endpoints_and_monotonicity():
    rng = np.random.default_rng(9)
    scores = rng.random(50)
    labels = rng.integers(0, 2, size=50)
    labels[0], labels[1] = 0, 1
    pts = roc_curve(scores, labels)
    assert pts[0] == (0.0, 0.0)
    assert pts[-1] == (1.0, 1.0)
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    assert xs == sorted(xs)
    assert ys == sorted(ys)


def test_roc_curve_area_equals_rank_auc():
    rng = np.random.default_rng(77)
    for trial in range(200):
        n = int(rng.integers(2, 120))
        labels = rng.integers(0, 2, size=n)
        if labels.min() == labels.max():
            labels[0] = 1 - labels[0]
        if rng.random() < 0.5:
            scores = rng.random(n)
        else:
            scores = rng.integers(0, 4, size=n) / 3.0
        pts = roc_curve(scores, labels)
        assert abs(trapezoid_area(pts) - roc_auc(scores, labels)) <= 1e-12


def test_perfect_separation_curve():
    pts = roc_curve([0.1, 0.2, 0.8, 0.9], [0, 0, 1, 1])
    assert trapezoid_area(pts) == 1.0
    assert (0.0, 1.0) in pts


def test_stratified_kfold_partitions():
    rng = np.random.default_rng(5)
    labels = np.array([1] * 33 + [0] * 27)
    folds = stratified_kfold(labels, k=5, seed=3)
    assert len(folds) == 5
    all_idx = np.concatenate(folds)
    assert sorted(all_idx.tolist()) == list(range(60))
    for fold in folds:
        pos = int(labels[fold].sum())
        neg = len(fold) - pos
        assert abs(pos - 33 / 5) < 1
        assert abs(neg - 27 / 5) < 1
    again = stratified_kfold(labels, k=5, seed=3)
    for a, b in zip(folds, again):
        assert np.array_equal(a, b)
    _ = rng  # seed source for future extensions


def test_stratified_kfold_validation():
    labels = np.array([0, 0, 1, 1])
    with pytest.raises(ValueError):
        stratified_kfold(labels, k=1, seed=0)
    with pytest.raises(TooFewSamples):
        stratified_kfold(labels, k=3, seed=0)


def test_cross_validate_report(small_corpus):
    params = ForestParams(n_trees=15, rng_seed=4)
    report = cross_validate(small_corpus, params, k=3, seed=42)
    assert isinstance(report, CVReport)
    assert report.k == 3
    assert report.seed == 42
    assert report.dataset_digest == small_corpus.digest
    assert len(report.fold_aucs) == 3
    assert report.mean_auc == pytest.approx(float(np.mean(report.fold_aucs)))
    assert report.std_auc == pytest.approx(float(np.std(report.fold_aucs)))
    for cls, aucs in report.per_class_fold_aucs.items():
        assert len(aucs) == 3
        assert report.per_class_mean_auc[cls] == pytest.approx(float(np.mean(aucs)))
        for a in aucs:
            assert 0.0 <= a <= 1.0
    d = report.as_dict()
    assert d["k"] == 3 and d["params"]["n_trees"] == 15


def test_cross_validate_is_deterministic(small_corpus):
    params = ForestParams(n_trees=8, rng_seed=2)
    a = cross_validate(small_corpus, params, k=3, seed=7)
    b = cross_validate(small_corpus, params, k=3, seed=7)
    assert a.fold_aucs == b.fold_aucs
    assert a.per_class_fold_aucs == b.per_class_fold_aucs
