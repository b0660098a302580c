#!/usr/bin/env python3
"""Time the compiled kernels against the numpy fallback.

    python3 benchmarks/bench_kernels.py [--repeat 5] [--wordnet resources/wordnet]

Split search runs on random data shaped like the feature matrix. The graph
kernels run on WordNet when it is available, else on a random DAG.
"""
import argparse
import timeit

import numpy as np

from humorfeat import _pykernels

try:
    from humorfeat import _ckernels
except ImportError:
    _ckernels = None


def split_case(n, d, seed=0):
    rng = np.random.default_rng(seed)
    X = np.round(rng.normal(size=(n, d)), 2)
    y = rng.integers(0, 2, n).astype(np.float64)
    orders = np.ascontiguousarray(np.argsort(X, axis=0, kind="stable").T, dtype=np.intp)
    return X, y, orders


def graph_case(wordnet_dir, seed=0):
    rng = np.random.default_rng(seed)
    if wordnet_dir:
        from humorfeat.wordnet import load_wordnet
        g = load_wordnet(wordnet_dir)
        nouns = [s.node for s in g.synsets if s is not None and s.pos == "n"]
        sources = rng.choice(nouns, 40)
        return g.indptr, g.indices, sources.astype(np.int64), np.repeat(np.arange(5), 8).astype(np.int64)
    n = 50000
    src = np.repeat(np.arange(1, n), 2)
    dst = (rng.random(len(src)) * src).astype(np.int64)
    pairs = np.unique(np.stack([src, dst], 1), axis=0)
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(np.bincount(pairs[:, 0], minlength=n), out=indptr[1:])
    return indptr, pairs[:, 1].copy(), rng.integers(0, n, 40).astype(np.int64), np.repeat(np.arange(5), 8)


def bench(label, fn_py, fn_c, repeat):
    t_py = min(timeit.repeat(fn_py, number=1, repeat=repeat))
    line = "%-28s python %9.2f ms" % (label, t_py * 1e3)
    if fn_c is not None:
        t_c = min(timeit.repeat(fn_c, number=1, repeat=repeat))
        line += "   cython %9.2f ms   speedup %6.1fx" % (t_c * 1e3, t_py / t_c)
    print(line)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--wordnet", default=None, help="WordNet directory (default: random DAG)")
    args = ap.parse_args()
    if _ckernels is None:
        print("compiled kernels not built; timing the fallback only")

    for n, d in ((1000, 33), (10000, 33), (40000, 33)):
        X, y, o = split_case(n, d)
        for crit, name in ((_pykernels.GINI, "gini"), (_pykernels.MSE, "mse")):
            bench("best_split %s n=%d" % (name, n),
                  lambda: _pykernels.best_split(X, y, o, crit, 1),
                  None if _ckernels is None else (lambda: _ckernels.best_split(X, y, o, crit, 1)),
                  args.repeat)

    indptr, indices, sources, groups = graph_case(args.wordnet)
    bench("up_distances x40", lambda: [_pykernels.up_distances(indptr, indices, int(s)) for s in sources],
          None if _ckernels is None else (lambda: [_ckernels.up_distances(indptr, indices, int(s)) for s in sources]),
          args.repeat)
    bench("pair_extrema 40 senses", lambda: _pykernels.pair_extrema(indptr, indices, sources, groups),
          None if _ckernels is None else (lambda: _ckernels.pair_extrema(indptr, indices, sources, groups)),
          args.repeat)


if __name__ == "__main__":
    main()
