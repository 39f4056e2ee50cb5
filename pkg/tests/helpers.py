"""Shared helpers for the test-suite (parameter sweeps and brute-force oracles)."""

from itertools import combinations, permutations

from grassblow.grassmann import Parameters


def normalized_triples(max_n, min_r=1):
    out = []
    for n in range(2, max_n + 1):
        for p in range(1, n):
            for s in range(1, n):
                params = Parameters(s, p, n)
                if params.is_normalized and params.r >= min_r:
                    out.append(params)
    return out


def all_triples(max_n):
    return [Parameters(s, p, n) for n in range(2, max_n + 1) for p in range(1, n) for s in range(1, n)]


def brute_chart_count(params, l):
    """Count pivot tables by filtering ordered tuples over the full row and column ranges."""
    s, p, n = params.as_tuple()
    h = min(p, n - s) - l
    rows_all, cols_all = range(1, p + 1), range(1, n + 1)
    high_rows = sum(1 for t in permutations(rows_all, h) if all(i > l for i in t))
    high_cols = sum(1 for t in permutations(cols_all, h) if all(c > s + l for c in t))
    low_rows = sum(1 for t in permutations(rows_all, l) if all(i <= l for i in t))
    low_cols = sum(1 for t in permutations(cols_all, l) if all(c <= s - p + l for c in t))
    return high_rows * high_cols * low_rows * low_cols


def brute_orbit_pairs(r):
    subsets = [frozenset(c) for k in range(r + 1) for c in combinations(range(1, r + 1), k)]
    inf = float("inf")
    return {(a, b) for a in subsets for b in subsets if min(a, default=inf) + min(b, default=inf) >= r + 2}
