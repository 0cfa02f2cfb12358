"""Gadget constructions: products, uplifts, and the hardness core.

The central device is the labeled product ltimes(G, H): keep G, add every
edge of H enlarged by one vertex of G.  Choosing cores of known chromatic
number turns small hard instances into hard instances of higher uniformity
or more colors.

build_g1/build_g2 emit the linear 3-uniform dichotomy gadget: a labeled
graph on 5139 vertices whose proper 3-colorings either give the three
anchors a, b, c pairwise distinct colors (g1, 11800 edges) or are blocked
outright by one extra edge {a, b, c} (g2, 11801 edges).  Certificates carry
the anchors, a 19-vertex hitting set Z, and an explicit witness coloring;
provenance maps every vertex to a role string:

    anchor.a | anchor.b | anchor.c
    H<i>.<s|t|u|v>                  core blocks, i in 1..4
    T<idx>.H0.r<j>                  tuple block <idx> in 0..255, hub vertices
    T<idx>.H<j>.<s|t|u|v>           tuple block copies, j in 1..4
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Optional

from .hypercore import (
    Hypergraph,
    LabeledGraph,
    PartialColoring,
    WeightedHypergraph,
    is_k_uniform,
    labeled_to_hypergraph,
    validate_coloring,
)
from .instances import complete_graph, complete_uniform

__all__ = [
    "GadgetCertificate",
    "GadgetArtifact",
    "ltimes",
    "uplift_bounded",
    "uplift_uniform",
    "uplift_precoloring",
    "mwss_gadget",
    "build_g1",
    "build_g2",
]

_POS = "stuv"


@dataclass(frozen=True)
class GadgetCertificate:
    """What a hardness gadget must exhibit: its anchors, a small hitting set
    Z, and a witness coloring proving the intended colorings exist."""

    kind: str
    anchors: tuple[int, int, int]
    z: tuple[int, ...]
    witness: dict[int, int]


@dataclass(frozen=True)
class GadgetArtifact:
    """A built gadget: the hypergraph, its labeled form when constructed
    in-process (None when loaded back from files), certificate, and the
    vertex role map."""

    hypergraph: Hypergraph
    labeled: Optional[LabeledGraph]
    certificate: GadgetCertificate
    provenance: dict[int, str]


def ltimes(g: Hypergraph, h: Hypergraph) -> Hypergraph:
    """Labeled product: V(G) then V(H) shifted; edges E(G), then each e of H
    extended by each vertex x of G (e outer, x inner)."""
    edges: list[tuple[int, ...]] = list(g.edges)
    off = g.n
    for e in h.edges:
        shifted = tuple(v + off for v in e)
        for x in g.vertices():
            edges.append(shifted + (x,))
    return Hypergraph(g.n + h.n, edges)


def uplift_bounded(h: Hypergraph, r: int) -> Hypergraph:
    """Edge sizes grow by one, r-colorability is preserved exactly.

    Any proper r-coloring puts all r colors on the K_r core, so a
    monochromatic edge of h would extend to a monochromatic product edge;
    conversely a proper coloring of h combines with any rainbow core."""
    if r < 1:
        raise ValueError("need at least one color")
    return ltimes(complete_graph(r), h)


def uplift_uniform(h: Hypergraph, r: int, k: int) -> Hypergraph:
    """Uniformity-preserving uplift: k-uniform input, (k+1)-uniform output
    with the complete (k+1)-uniform core on (r-1)k + 1 vertices."""
    if r < 1:
        raise ValueError("need at least one color")
    if k < 1:
        raise ValueError("k must be positive")
    if not is_k_uniform(h, k):
        raise ValueError(f"input must be {k}-uniform")
    return ltimes(complete_uniform((r - 1) * k + 1, k + 1), h)


def uplift_precoloring(h: Hypergraph, r: int) -> tuple[Hypergraph, PartialColoring]:
    """Edgeless r-vertex core, vertex i precolored i: extension of the
    precoloring encodes r-coloring of h with one extra vertex per edge."""
    if r < 1:
        raise ValueError("need at least one color")
    core = Hypergraph(r, [])
    g = ltimes(core, h)
    pre = PartialColoring(r, {i: i for i in range(1, r + 1)})
    return g, pre


def mwss_gadget(wg: WeightedHypergraph) -> WeightedHypergraph:
    """Universal-vertex gadget for maximum-weight stable set.

    Adds v to every edge with w(v) = total weight + 1: the optimum of the
    output is exactly the optimum of the input plus v.  Exact rationals
    throughout.  Input must be uniform so the output stays uniform.
    """
    sizes = {len(e) for e in wg.edges}
    if len(sizes) > 1:
        raise ValueError("input must be uniform")
    v = wg.n + 1
    edges = [e + (v,) for e in wg.edges]
    weights = {u: wg.weight(u) for u in range(1, wg.n + 1)}
    weights[v] = wg.total_weight(range(1, wg.n + 1)) + Fraction(1)
    return WeightedHypergraph(v, edges, weights)


# ---------------------------------------------------------------------------
# The dichotomy gadget


def _k4(
    vs: tuple[int, int, int, int],
    l_st: int,
    l_uv: int,
    l_su: int,
    l_tv: int,
    l_sv: int,
    l_tu: int,
) -> list[tuple[int, int, int]]:
    s, t, u, v = vs
    return [
        (s, t, l_st),
        (u, v, l_uv),
        (s, u, l_su),
        (t, v, l_tv),
        (s, v, l_sv),
        (t, u, l_tu),
    ]


def _core_vertex(i: int, pos: int) -> int:
    # Core block H_i occupies 4 + 4(i-1) .. 7 + 4(i-1), order s, t, u, v.
    return 4 + 4 * (i - 1) + pos


def _g1_labeled() -> tuple[LabeledGraph, dict[int, str]]:
    a, b, c = 1, 2, 3
    prov = {1: "anchor.a", 2: "anchor.b", 3: "anchor.c"}
    edges: list[tuple[int, int, int]] = []
    for i in range(1, 5):
        vs = tuple(_core_vertex(i, p) for p in range(4))
        for p in range(4):
            prov[vs[p]] = f"H{i}.{_POS[p]}"
        edges.extend(_k4(vs, a, a, b, b, c, c))
    # One block group per choice of a 4-tuple of core vertices, enumerated
    # lexicographically by position within (s, t, u, v).
    for tidx, picks in enumerate(product(range(4), repeat=4)):
        base = 20 + 20 * tidx
        hub = (base, base + 1, base + 2, base + 3)
        for j in range(4):
            prov[hub[j]] = f"T{tidx}.H0.r{j + 1}"
        blocks = {}
        for j in range(1, 5):
            blocks[j] = tuple(base + 4 * j + p for p in range(4))
            for p in range(4):
                prov[blocks[j][p]] = f"T{tidx}.H{j}.{_POS[p]}"
        comp = tuple(_core_vertex(i + 1, picks[i]) for i in range(4))
        edges.extend(_k4(hub, a, a, b, b, c, c))
        for j in range(1, 5):
            edges.extend(_k4(blocks[j], a, a, b, b, c, c))
        for j in range(1, 5):
            s, t, u, v = blocks[j]
            rj = hub[j - 1]
            edges.extend(
                [(s, rj, comp[0]), (t, rj, comp[1]), (u, rj, comp[2]), (v, rj, comp[3])]
            )
    return LabeledGraph(5139, edges), prov


def _g1_witness() -> dict[int, int]:
    # Proper 3-coloring giving the anchors pairwise distinct colors; checked
    # again by the verifiers, never trusted silently.
    w = {1: 1, 2: 2, 3: 3}
    for i in range(1, 5):
        s, t, u, v = (_core_vertex(i, p) for p in range(4))
        w[s] = w[t] = 2
        w[u] = w[v] = 3
    for tidx in range(256):
        base = 20 + 20 * tidx
        w[base] = w[base + 3] = 1
        w[base + 1] = w[base + 2] = 2
        for j in range(1, 5):
            s, t, u, v = (base + 4 * j + p for p in range(4))
            w[s] = w[u] = 1
            w[t] = w[v] = 3
    return w


def build_g1() -> GadgetArtifact:
    """The dichotomy gadget G1: 5139 vertices, 11800 edges, anchors 1, 2, 3.

    Every proper 3-coloring either colors the anchors pairwise distinct or
    is ruled out block by block; the witness realizes the distinct case.
    """
    lg, prov = _g1_labeled()
    witness = _g1_witness()
    g = labeled_to_hypergraph(lg)
    assert validate_coloring(g, 3, witness)
    cert = GadgetCertificate("g1", (1, 2, 3), tuple(range(1, 20)), witness)
    return GadgetArtifact(g, lg, cert, prov)


def build_g2() -> GadgetArtifact:
    """G1 plus the edge {a, b, c}: proper 3-colorings must now split the
    anchors, so anchor identification becomes impossible outright."""
    lg, prov = _g1_labeled()
    lg2 = LabeledGraph(lg.n, list(lg.edges) + [(1, 2, 3)])
    witness = _g1_witness()
    g = labeled_to_hypergraph(lg2)
    assert validate_coloring(g, 3, witness)
    cert = GadgetCertificate("g2", (1, 2, 3), tuple(range(1, 20)), witness)
    return GadgetArtifact(g, lg2, cert, prov)
