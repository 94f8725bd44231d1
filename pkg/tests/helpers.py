"""Shared test utilities: independent brute-force oracles and graph builders.

Everything here is deliberately dumb and slow: these are the reference
paths that the library's faster implementations are checked against.
"""

from __future__ import annotations

import itertools
from collections import Counter

from degpoly import DegreePoly, SimpleGraph


def mask_graph(n: int, mask: int) -> SimpleGraph:
    """Graph on n vertices from an upper-triangular edge bitmask."""
    pairs = list(itertools.combinations(range(n), 2))
    edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
    return SimpleGraph.from_edges(n, edges)


def all_graphs(n: int):
    """Every labeled graph on n vertices (2^(n choose 2) of them)."""
    for mask in range(1 << (n * (n - 1) // 2)):
        yield mask_graph(n, mask)


def brute_min_mask(n: int, mask: int) -> int:
    """Isomorphism-class key by trying every permutation: the minimum
    edge bitmask over all relabelings.  Independent of canonical_form."""
    pairs = list(itertools.combinations(range(n), 2))
    idx = {p: i for i, p in enumerate(pairs)}
    edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
    best = None
    for perm in itertools.permutations(range(n)):
        m = 0
        for u, v in edges:
            a, b = perm[u], perm[v]
            m |= 1 << idx[(a, b) if a < b else (b, a)]
        if best is None or m < best:
            best = m
    return best


def naive_vertex_poly(g: SimpleGraph, v: int) -> DegreePoly:
    """Vertex degree polynomial straight from the definition."""
    return DegreePoly(Counter(len(g.adj[w]) for w in g.adj[v]))


def paw_graph() -> SimpleGraph:
    """Triangle a, b, c with a pendant vertex d hanging off c."""
    return SimpleGraph.from_edges(4, [(0, 1), (0, 2), (1, 2), (2, 3)], "abcd")


def degree_multiset(g: SimpleGraph) -> tuple[int, ...]:
    return tuple(sorted(g.degrees(), reverse=True))
