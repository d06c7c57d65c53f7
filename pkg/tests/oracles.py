"""Slow, obviously-correct reference implementations used only by the tests."""
import itertools

import numpy as np


def hausdorff_bruteforce(xs, ys):
    """O(nm) min-max over the full distance matrix."""
    d = np.abs(np.subtract.outer(np.asarray(xs, float), np.asarray(ys, float)))
    return max(d.min(axis=1).max(), d.min(axis=0).max())


def directed_bruteforce(xs, ys):
    return max(min(abs(a - b) for b in ys) for a in xs)


def distortion_bruteforce(pairs, xs, ys):
    best = 0.0
    for (i1, j1), (i2, j2) in itertools.product(pairs, repeat=2):
        best = max(best, abs(abs(xs[i1] - xs[i2]) - abs(ys[j1] - ys[j2])))
    return best


def gh_by_function_pairs(xs, ys):
    """Half the least distortion over every graph(f) + transpose(graph(g))."""
    n, m = len(xs), len(ys)
    best = np.inf
    for f in itertools.product(range(m), repeat=n):
        for g in itertools.product(range(n), repeat=m):
            pairs = {(i, f[i]) for i in range(n)} | {(g[j], j) for j in range(m)}
            best = min(best, distortion_bruteforce(sorted(pairs), xs, ys))
    return best / 2


def gh_by_relations(xs, ys):
    """Half the least distortion over every covering relation (tiny inputs only)."""
    n, m = len(xs), len(ys)
    cells = list(itertools.product(range(n), range(m)))
    best = np.inf
    for mask in range(1, 1 << len(cells)):
        pairs = [c for k, c in enumerate(cells) if mask >> k & 1]
        if {i for i, _ in pairs} == set(range(n)) and {j for _, j in pairs} == set(range(m)):
            best = min(best, distortion_bruteforce(pairs, xs, ys))
    return best / 2


def grid_minimum(xs, ys, step):
    """Dense-grid minimum of delta -> d_H(X, Y + delta) over the natural window."""
    xs, ys = np.asarray(xs, float), np.asarray(ys, float)
    S = np.subtract.outer(xs, ys)
    grid = np.arange(S.min() - 1.0, S.max() + 1.0 + step / 2, step)
    vals = np.array([hausdorff_bruteforce(xs, ys + t) for t in grid])
    return grid, vals


def first_optimal_function_pair(xs, ys):
    """Lexicographically first (f, g) attaining the least distortion, as a pair set."""
    n, m = len(xs), len(ys)
    best, arg = np.inf, None
    for f in itertools.product(range(m), repeat=n):
        for g in itertools.product(range(n), repeat=m):
            pairs = sorted({(i, f[i]) for i in range(n)} | {(g[j], j) for j in range(m)})
            d = distortion_bruteforce(pairs, xs, ys)
            if d < best:
                best, arg = d, tuple(pairs)
    return best, arg
