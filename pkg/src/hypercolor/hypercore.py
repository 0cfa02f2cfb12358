"""Core hypergraph types and predicates.

Vertices are 1-based integers 1..n.  Edges are stored as tuples sorted
ascending; edge order across the hypergraph is preserved as given, which the
greedy first-fit routines rely on.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Callable, Iterable, Optional

__all__ = [
    "Hypergraph",
    "WeightedHypergraph",
    "Matching",
    "PartialColoring",
    "LabeledGraph",
    "is_k_uniform",
    "is_k_bounded",
    "is_linear",
    "is_stable",
    "validate_coloring",
    "is_valid_partial",
    "greedy_maximal_matching",
    "max_matching_exact",
    "find_induced_one_edge",
    "find_induced_matching",
    "labeled_to_hypergraph",
    "hypergraph_to_labeled",
]


def _normalize_edge(edge: Iterable[int], n: int, what: str = "edge") -> tuple[int, ...]:
    e = tuple(sorted(edge))
    if not e:
        raise ValueError(f"empty {what}")
    for v in e:
        if not isinstance(v, int) or isinstance(v, bool):
            raise ValueError(f"non-integer vertex {v!r} in {what}")
        if v < 1 or v > n:
            raise ValueError(f"vertex {v} out of range 1..{n} in {what}")
    for a, b in zip(e, e[1:]):
        if a == b:
            raise ValueError(f"repeated vertex {a} in {what} {e}")
    return e


@dataclass(frozen=True)
class Hypergraph:
    """A finite hypergraph on vertex set {1..n}.

    Edges are kept in the order given (duplicates rejected); within an edge
    vertices are sorted ascending.  Instances are immutable; derived graphs
    are built by constructing new objects.
    """

    n: int
    edges: tuple[tuple[int, ...], ...]

    def __init__(self, n: int, edges: Iterable[Iterable[int]]):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        norm = tuple(_normalize_edge(e, n) for e in edges)
        seen: set[tuple[int, ...]] = set()
        for e in norm:
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", norm)

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def max_edge_size(self) -> int:
        return max((len(e) for e in self.edges), default=0)

    def edge_masks(self) -> list[int]:
        """Bitmask per edge, bit v-1 set for each vertex v.  Fresh list."""
        masks = []
        for e in self.edges:
            m = 0
            for v in e:
                m |= 1 << (v - 1)
            masks.append(m)
        return masks

    def induced(self, vertices: Iterable[int]) -> list[tuple[int, ...]]:
        """Edges fully contained in the given vertex set (original tuples)."""
        w = set(vertices)
        return [e for e in self.edges if w.issuperset(e)]


@dataclass(frozen=True)
class WeightedHypergraph:
    """Hypergraph with a positive rational weight per vertex.

    Weights are exact fractions; weight arithmetic must never go through
    floats.  weights[v] defaults to 1 for vertices not mentioned at
    construction.
    """

    n: int
    edges: tuple[tuple[int, ...], ...]
    weights: tuple[Fraction, ...]

    def __init__(
        self,
        n: int,
        edges: Iterable[Iterable[int]],
        weights: Optional[dict[int, Fraction]] = None,
    ):
        base = Hypergraph(n, edges)
        wlist = [Fraction(1)] * n
        for v, w in (weights or {}).items():
            if v < 1 or v > n:
                raise ValueError(f"weighted vertex {v} out of range 1..{n}")
            w = Fraction(w)
            if w <= 0:
                raise ValueError(f"weight of vertex {v} must be positive, got {w}")
            wlist[v - 1] = w
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", base.edges)
        object.__setattr__(self, "weights", tuple(wlist))

    @property
    def m(self) -> int:
        return len(self.edges)

    def weight(self, v: int) -> Fraction:
        return self.weights[v - 1]

    def total_weight(self, vertices: Iterable[int]) -> Fraction:
        return sum((self.weights[v - 1] for v in vertices), Fraction(0))

    def unweighted(self) -> Hypergraph:
        return Hypergraph(self.n, self.edges)


@dataclass(frozen=True)
class Matching:
    """A set of pairwise disjoint edges, with their indices into E(G)."""

    indices: tuple[int, ...]
    edges: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if len(self.indices) != len(self.edges):
            raise ValueError("index/edge length mismatch")
        seen: set[int] = set()
        for e in self.edges:
            for v in e:
                if v in seen:
                    raise ValueError(f"edges share vertex {v}; not a matching")
                seen.add(v)

    @property
    def size(self) -> int:
        return len(self.edges)

    def covered(self) -> tuple[int, ...]:
        """All vertices covered by the matching, sorted ascending."""
        return tuple(sorted(v for e in self.edges for v in e))


@dataclass
class PartialColoring:
    """A coloring of a subset of the vertices with colors 1..r.

    Validity relative to a hypergraph (no monochromatic edge inside the
    colored set) is checked by is_valid_partial, not here.
    """

    r: int
    colors: dict[int, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.r < 1:
            raise ValueError("need at least one color")
        for v, c in self.colors.items():
            if v < 1:
                raise ValueError(f"bad vertex {v}")
            if not 1 <= c <= self.r:
                raise ValueError(f"color {c} of vertex {v} outside 1..{self.r}")

    def domain(self) -> tuple[int, ...]:
        return tuple(sorted(self.colors))

    def copy(self) -> "PartialColoring":
        return PartialColoring(self.r, dict(self.colors))

    def extended(self, extra: dict[int, int]) -> "PartialColoring":
        merged = dict(self.colors)
        for v, c in extra.items():
            if v in merged and merged[v] != c:
                raise ValueError(f"vertex {v} recolored {merged[v]} -> {c}")
            merged[v] = c
        return PartialColoring(self.r, merged)


@dataclass(frozen=True)
class LabeledGraph:
    """A simple graph whose every edge carries a vertex label l(uv) not in {u, v}.

    The construction device behind the NP-hardness gadgets: replacing each
    labeled edge uv by the triple {u, v, l(uv)} must give a linear 3-uniform
    hypergraph, which is checked here at construction.
    """

    n: int
    edges: tuple[tuple[int, int, int], ...]

    def __init__(self, n: int, edges: Iterable[tuple[int, int, int]]):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        norm: list[tuple[int, int, int]] = []
        pairs: set[tuple[int, int]] = set()
        for u, v, lab in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if u > v:
                u, v = v, u
            for x in (u, v, lab):
                if x < 1 or x > n:
                    raise ValueError(f"vertex {x} out of range 1..{n}")
            if lab in (u, v):
                raise ValueError(f"label {lab} is an endpoint of edge ({u},{v})")
            if (u, v) in pairs:
                raise ValueError(f"duplicate edge ({u},{v})")
            pairs.add((u, v))
            norm.append((u, v, lab))
        # Linearity of the derived triples: two triples sharing >= 2 vertices
        # would repeat an unordered pair.
        seen_pairs: set[tuple[int, int]] = set()
        for u, v, lab in norm:
            t = sorted((u, v, lab))
            for a, b in ((t[0], t[1]), (t[0], t[2]), (t[1], t[2])):
                if (a, b) in seen_pairs:
                    raise ValueError(
                        f"labeled edges not linear: pair ({a},{b}) repeats"
                    )
                seen_pairs.add((a, b))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(norm))

    @property
    def m(self) -> int:
        return len(self.edges)


def is_k_uniform(g: Hypergraph, k: int) -> bool:
    return all(len(e) == k for e in g.edges)


def is_k_bounded(g: Hypergraph, k: int) -> bool:
    return all(len(e) <= k for e in g.edges)


def is_linear(g: Hypergraph) -> bool:
    """Any two distinct edges share at most one vertex.

    Pair-counting: linear iff no unordered vertex pair lies in two edges.
    O(sum |e|^2), which is what makes this usable on reduction outputs with
    hundreds of thousands of edges.
    """
    seen: set[tuple[int, int]] = set()
    for e in g.edges:
        for a, b in combinations(e, 2):
            if (a, b) in seen:
                return False
            seen.add((a, b))
    return True


def is_stable(g: Hypergraph, s: Iterable[int]) -> bool:
    """True iff no edge of g is fully contained in s."""
    w = set(s)
    for v in w:
        if v < 1 or v > g.n:
            raise ValueError(f"vertex {v} out of range 1..{g.n}")
    return not any(w.issuperset(e) for e in g.edges)


def validate_coloring(g: Hypergraph, r: int, coloring: dict[int, int]) -> bool:
    """Total proper r-coloring check: every vertex colored in 1..r, no edge
    monochromatic.  Returns False rather than raising on bad input."""
    if r < 1:
        return False
    for v in g.vertices():
        c = coloring.get(v)
        if c is None or not 1 <= c <= r:
            return False
    for e in g.edges:
        first = coloring[e[0]]
        if all(coloring[v] == first for v in e[1:]):
            return False
    return True


def is_valid_partial(g: Hypergraph, pc: PartialColoring) -> bool:
    """No edge fully inside the colored set is monochromatic."""
    col = pc.colors
    for v in col:
        if v > g.n:
            return False
    for e in g.edges:
        if all(v in col for v in e):
            first = col[e[0]]
            if all(col[v] == first for v in e[1:]):
                return False
    return True


def greedy_maximal_matching(g: Hypergraph) -> Matching:
    """First-fit maximal matching in edge-storage order.

    Every edge of g meets the covered vertex set (maximality), which the
    coloring solvers rely on.
    """
    used: set[int] = set()
    idx: list[int] = []
    chosen: list[tuple[int, ...]] = []
    for i, e in enumerate(g.edges):
        if used.isdisjoint(e):
            used.update(e)
            idx.append(i)
            chosen.append(e)
    return Matching(tuple(idx), tuple(chosen))


def max_matching_exact(g: Hypergraph, cap: int) -> Matching:
    """Exact maximum matching by branch and bound, stopping early at cap+1.

    Returns a maximum matching if nu(g) <= cap, otherwise some matching of
    size cap+1 (a witness that the promise nu <= cap fails).  Lexicographic
    first among maximum matchings by edge index sequence.
    """
    if cap < 0:
        raise ValueError("cap must be nonnegative")
    masks = g.edge_masks()
    m = len(masks)
    best_idx: list[int] = []

    def walk(i: int, used: int, picked: list[int]) -> bool:
        # Returns True once a matching of size cap+1 is found (stop signal).
        nonlocal best_idx
        if len(picked) > len(best_idx):
            best_idx = list(picked)
            if len(best_idx) > cap:
                return True
        if i == m or len(picked) + (m - i) <= len(best_idx):
            return False
        if not masks[i] & used:
            picked.append(i)
            if walk(i + 1, used | masks[i], picked):
                return True
            picked.pop()
        return walk(i + 1, used, picked)

    walk(0, 0, [])
    return Matching(tuple(best_idx), tuple(g.edges[i] for i in best_idx))


def find_induced_one_edge(g: Hypergraph, t: int) -> Optional[tuple[int, ...]]:
    """Smallest witness that g contains the one-edge obstruction on t+3 vertices.

    Looks for a vertex set W of size t+3 whose induced subhypergraph has
    exactly one edge, that edge of size 3.  Returns W sorted, or None when g
    is free of the obstruction.  Enumeration is lexicographic: size-3 edges in
    storage order, then t-subsets of the remaining vertices.
    """
    if t < 0:
        raise ValueError("t must be nonnegative")
    if not is_k_bounded(g, 3):
        raise ValueError("input must be 3-bounded")
    verts = list(g.vertices())
    for e in g.edges:
        if len(e) != 3:
            continue
        rest = [v for v in verts if v not in e]
        for extra in combinations(rest, t):
            w = set(e) | set(extra)
            count = 0
            for f in g.edges:
                if w.issuperset(f):
                    count += 1
                    if count > 1:
                        break
            if count == 1:
                return tuple(sorted(w))
    return None


def find_induced_matching(g: Hypergraph, s: int) -> Optional[Matching]:
    """An induced matching of exactly s edges, or None.

    Induced: the union W of the s disjoint edges contains no edge of g other
    than the chosen ones.  Exhaustive over index-increasing edge subsets,
    first hit wins.
    """
    if s < 0:
        raise ValueError("s must be nonnegative")
    m = g.m

    def extend(start: int, picked: list[int], used: set[int]) -> Optional[list[int]]:
        if len(picked) == s:
            w = set(used)
            inside = [i for i, f in enumerate(g.edges) if w.issuperset(f)]
            if inside == picked:
                return list(picked)
            return None
        for i in range(start, m):
            e = g.edges[i]
            if used.isdisjoint(e):
                picked.append(i)
                used.update(e)
                got = extend(i + 1, picked, used)
                if got is not None:
                    return got
                picked.pop()
                used.difference_update(e)
        return None

    got = extend(0, [], set())
    if got is None:
        return None
    return Matching(tuple(got), tuple(g.edges[i] for i in got))


def labeled_to_hypergraph(lg: LabeledGraph) -> Hypergraph:
    """Replace each labeled edge uv by the triple {u, v, l(uv)}.

    Output is linear and 3-uniform; edge order follows the labeled edge
    order.
    """
    return Hypergraph(lg.n, [(u, v, lab) for u, v, lab in lg.edges])


def hypergraph_to_labeled(
    g: Hypergraph, pick: Optional[Callable[[tuple[int, ...]], int]] = None
) -> LabeledGraph:
    """Inverse direction: choose a label vertex per triple.

    Requires g linear and 3-uniform.  pick maps each edge to the vertex that
    becomes the label (default: the largest).  Round-tripping through
    labeled_to_hypergraph with pick = the original labels is the identity on
    edge sets.
    """
    if not is_k_uniform(g, 3):
        raise ValueError("input must be 3-uniform")
    if not is_linear(g):
        raise ValueError("input must be linear")
    if pick is None:
        pick = lambda e: e[2]
    out = []
    for e in g.edges:
        lab = pick(e)
        if lab not in e:
            raise ValueError(f"pick returned {lab}, not a vertex of edge {e}")
        u, v = (x for x in e if x != lab)
        out.append((u, v, lab))
    return LabeledGraph(g.n, out)
