"""Split-kernel benchmark: compiled extension vs pure-numpy fallback.

Times the raw best-split scan and a full forest training run on the same
synthetic data, then prints per-backend timings and the speedup. Both
backends produce bit-identical models, so only the wall clock differs.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from botscope.forest import ForestParams, backend, train_forest
from botscope.forest.cart import best_split


def time_kernel(kernel, X, y, repeats: int) -> float:
    d = X.shape[1]
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        best_split(X, y, range(d), kernel=kernel)
        best = min(best, time.perf_counter() - start)
    return best


def time_training(kernel, X, y, params: ForestParams, repeats: int) -> float:
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        train_forest(X, y, params, kernel=kernel)
        best = min(best, time.perf_counter() - start)
    return best


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--rows", type=int, default=2000)
    parser.add_argument("--cols", type=int, default=64)
    parser.add_argument("--trees", type=int, default=30)
    parser.add_argument("--repeats", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    rng = np.random.default_rng(args.seed)
    X = rng.normal(size=(args.rows, args.cols))
    y = rng.integers(0, 2, size=args.rows).astype(np.int8)
    y[0], y[1] = 0, 1
    params = ForestParams(n_trees=args.trees, rng_seed=args.seed)

    backends = [("pure", backend.get("pure"))]
    if backend.compiled_available():
        backends.append(("compiled", backend.get("compiled")))
    else:
        print("note: compiled extension not built; timing the fallback only")

    print(f"data: {args.rows} x {args.cols}, {args.trees} trees, "
          f"best of {args.repeats} runs")
    results = {}
    for name, kernel in backends:
        split_s = time_kernel(kernel, X, y, args.repeats)
        train_s = time_training(kernel, X, y, params, args.repeats)
        results[name] = (split_s, train_s)
        print(f"{name:>9}: single split scan {split_s * 1e3:8.2f} ms"
              f"   train {train_s:7.3f} s")

    if len(results) == 2:
        split_x = results["pure"][0] / results["compiled"][0]
        train_x = results["pure"][1] / results["compiled"][1]
        print(f" speedup: split {split_x:.1f}x, training {train_x:.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
