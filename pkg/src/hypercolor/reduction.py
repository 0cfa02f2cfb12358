"""Reduction from 3-coloring of max-degree-4 graphs to 2-coloring of linear
3-uniform hypergraphs with small matching number.

Layout of the output vertex space (all recorded in provenance):

    1..30                anchors a_q^p, groups A (p=1), B (p=2), C (p=3),
                         vertex id (p-1)*10 + q, role "anchor.<p>.<q>"
    28 copies x 5136     gadget interiors, role "copy<ci>.<g1 role>";
                         copy 0 is the g2 build pinning the first anchor
                         triple, copies 1..27 tie the remaining anchors of
                         one group to that triple
    n* vertices          the input graph, role "star.<v>"
    12 per input edge    three blocks s,t,u,v, role "edge<ei>.H<i>.<s|t|u|v>"

Every input edge xy with edge color k = f'(xy) spawns 30 hyperedges wired to
anchor pair (a_{2k-1}, a_{2k}) across the three groups; a proper 3-coloring
of the output forces x and y apart, and conversely any proper 3-coloring of
the input lifts block by block.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .edgecolor import misra_gries_edge_color
from .gadgets import GadgetArtifact, _g1_witness, _k4, build_g1, build_g2
from .hypercore import (
    Hypergraph,
    LabeledGraph,
    is_k_uniform,
    labeled_to_hypergraph,
    validate_coloring,
)

__all__ = ["CopyInfo", "ReductionOutput", "reduce_3col_linear", "lift_3coloring"]

G1_N = 5139
G1_M = 11800
COPY_INTERIOR = G1_N - 3


@dataclass(frozen=True)
class CopyInfo:
    """One gadget copy: interior base offset, its three anchor vertices, and
    which build it came from ("g2" only for copy 0)."""

    base: int
    anchors: tuple[int, int, int]
    kind: str


@dataclass(frozen=True)
class ReductionOutput:
    hypergraph: Hypergraph
    labeled: Optional[LabeledGraph]
    gstar: Hypergraph
    provenance: dict[int, str]
    hitting_set: frozenset[int]
    edge_coloring: dict[tuple[int, int], int]
    copies: tuple[CopyInfo, ...]
    star_offset: int
    block_offset: int

    def star_vertex(self, v: int) -> int:
        return self.star_offset + v

    def block_vertices(self, ei: int) -> tuple[int, ...]:
        """The 12 fresh vertices of input edge ei: s,t,u,v per block 1..3."""
        base = self.block_offset + 12 * ei
        return tuple(range(base + 1, base + 13))


def _anchor(q: int, p: int) -> int:
    # a_q^p, q in 1..10, group p in 1..3.
    return (p - 1) * 10 + q


def _sup(p: int) -> int:
    # Superscript arithmetic: 4 wraps to 1, 5 wraps to 2.
    return (p - 1) % 3 + 1


def reduce_3col_linear(gstar: Hypergraph) -> ReductionOutput:
    """Build the linear 3-uniform instance for a graph of max degree <= 4.

    The input is 2-uniform; vertices of degree above 4 are rejected since
    the anchor pairs only cover edge colors 1..5.
    """
    if not is_k_uniform(gstar, 2):
        raise ValueError("input must be a simple graph (2-uniform)")
    deg = [0] * (gstar.n + 1)
    for u, v in gstar.edges:
        deg[u] += 1
        deg[v] += 1
    if max(deg, default=0) > 4:
        raise ValueError("input must have maximum degree at most 4")
    fprime = misra_gries_edge_color(gstar)
    assert all(1 <= k <= 5 for k in fprime.values())

    g1 = build_g1()
    g2 = build_g2()
    prov: dict[int, str] = {}
    edges: list[tuple[int, int, int]] = []
    for p in range(1, 4):
        for q in range(1, 11):
            prov[_anchor(q, p)] = f"anchor.{p}.{q}"

    def add_copy(ci: int, art: GadgetArtifact, anchors: tuple[int, int, int]) -> CopyInfo:
        base = 30 + COPY_INTERIOR * ci

        def mapped(x: int) -> int:
            return anchors[x - 1] if x <= 3 else base + (x - 3)

        assert art.labeled is not None
        for u, v, lab in art.labeled.edges:
            edges.append((mapped(u), mapped(v), mapped(lab)))
        for x, role in art.provenance.items():
            if x > 3:
                prov[base + (x - 3)] = f"copy{ci}.{role}"
        return CopyInfo(base, anchors, art.certificate.kind)

    copies: list[CopyInfo] = [add_copy(0, g2, (_anchor(1, 1), _anchor(1, 2), _anchor(1, 3)))]
    ci = 1
    for i in range(2, 11):
        for p in range(1, 4):
            anchors = (
                _anchor(i if p == 1 else 1, 1),
                _anchor(i if p == 2 else 1, 2),
                _anchor(i if p == 3 else 1, 3),
            )
            copies.append(add_copy(ci, g1, anchors))
            ci += 1

    star_offset = 30 + 28 * COPY_INTERIOR
    for v in gstar.vertices():
        prov[star_offset + v] = f"star.{v}"
    block_offset = star_offset + gstar.n
    for ei, (x, y) in enumerate(gstar.edges):
        k = fprime[(x, y)]
        base = block_offset + 12 * ei
        gx, gy = star_offset + x, star_offset + y
        for i in range(1, 4):
            s, t, u, v = (base + 4 * (i - 1) + p for p in range(1, 5))
            for p, name in enumerate("stuv"):
                prov[base + 4 * (i - 1) + p + 1] = f"edge{ei}.H{i}.{name}"
            lo_next = _anchor(2 * k - 1, _sup(i + 1))
            hi_next = _anchor(2 * k, _sup(i + 1))
            lo_far = _anchor(2 * k - 1, _sup(i + 2))
            hi_far = _anchor(2 * k, _sup(i + 2))
            edges.extend(_k4((s, t, u, v), lo_next, hi_next, lo_far, lo_far, hi_far, hi_far))
            lo_own = _anchor(2 * k - 1, i)
            hi_own = _anchor(2 * k, i)
            edges.extend([(gx, s, lo_own), (gy, t, lo_own), (gx, u, hi_own), (gy, v, hi_own)])

    n_total = block_offset + 12 * gstar.m
    labeled = LabeledGraph(n_total, edges)
    hypergraph = labeled_to_hypergraph(labeled)

    hitting: set[int] = set()
    for info in copies:
        hitting.update(info.anchors)
        hitting.update(range(info.base + 1, info.base + 17))
    assert len(hitting) <= 19 * 28

    return ReductionOutput(
        hypergraph=hypergraph,
        labeled=labeled,
        gstar=gstar,
        provenance=prov,
        hitting_set=frozenset(hitting),
        edge_coloring=dict(fprime),
        copies=tuple(copies),
        star_offset=star_offset,
        block_offset=block_offset,
    )


def lift_3coloring(red: ReductionOutput, coloring: dict[int, int]) -> dict[int, int]:
    """Lift a proper 3-coloring of the input graph to the reduction output.

    Anchor group p takes color p, gadget interiors take the stored witness
    (their anchor triples sit at colors 1, 2, 3 already), input vertices keep
    their color, and each block resolves by whether its endpoint already uses
    the block's own color.
    """
    if not validate_coloring(red.gstar, 3, coloring):
        raise ValueError("not a proper 3-coloring of the input graph")
    d: dict[int, int] = {}
    for p in range(1, 4):
        for q in range(1, 11):
            d[_anchor(q, p)] = p
    witness = _g1_witness()
    for info in red.copies:
        for x, c in witness.items():
            if x > 3:
                d[info.base + (x - 3)] = c
    for v in red.gstar.vertices():
        d[red.star_vertex(v)] = coloring[v]

    def wrap(c: int) -> int:
        return (c - 1) % 3 + 1

    for ei, (x, y) in enumerate(red.gstar.edges):
        vs = red.block_vertices(ei)
        cx = coloring[x]
        for i in range(1, 4):
            s, t, u, v = vs[4 * (i - 1) : 4 * i]
            if cx != i:
                d[s] = d[u] = i
                d[t] = d[v] = wrap(i + 1)
            else:
                d[s] = d[u] = wrap(i + 1)
                d[t] = d[v] = i
    assert validate_coloring(red.hypergraph, 3, d)
    return d
