"""Small standard instances used by gadget cores, tests, and docs."""

from __future__ import annotations

from itertools import combinations

from .hypercore import Hypergraph

__all__ = [
    "complete_graph",
    "complete_uniform",
    "cycle_graph",
    "matching_hypergraph",
    "fano",
    "petersen",
]


def complete_graph(n: int) -> Hypergraph:
    """K_n as a 2-uniform hypergraph (no edges for n < 2)."""
    return Hypergraph(n, combinations(range(1, n + 1), 2))


def complete_uniform(n: int, k: int) -> Hypergraph:
    """All k-subsets of {1..n} as edges (edgeless when n < k)."""
    return Hypergraph(n, combinations(range(1, n + 1), k))


def cycle_graph(n: int) -> Hypergraph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    edges = [(i, i + 1) for i in range(1, n)] + [(1, n)]
    return Hypergraph(n, edges)


def matching_hypergraph(s: int, k: int) -> Hypergraph:
    """s pairwise disjoint k-edges on s*k vertices."""
    edges = [tuple(range(i * k + 1, (i + 1) * k + 1)) for i in range(s)]
    return Hypergraph(s * k, edges)


def fano() -> Hypergraph:
    """The Fano plane: 7 points, 7 lines, linear, nu = 1, not 2-colorable."""
    lines = [
        (1, 2, 3),
        (1, 4, 5),
        (1, 6, 7),
        (2, 4, 6),
        (2, 5, 7),
        (3, 4, 7),
        (3, 5, 6),
    ]
    return Hypergraph(7, lines)


def petersen() -> Hypergraph:
    """The Petersen graph: outer cycle 1..5, spokes, inner pentagram 6..10."""
    outer = [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)]
    spokes = [(1, 6), (2, 7), (3, 8), (4, 9), (5, 10)]
    inner = [(6, 8), (8, 10), (7, 10), (7, 9), (6, 9)]
    return Hypergraph(10, outer + spokes + inner)
