"""Shared corpus generators and the gadget mutation catalog.

Everything here is deterministic: generators take an explicit
random.Random so any failing case can be replayed from the seed.
"""

from hypercolor import (
    GadgetArtifact,
    GadgetCertificate,
    Hypergraph,
    WeightedHypergraph,
)


def random_hypergraph(rng, n, m, sizes):
    """Up to m distinct random edges with sizes drawn from `sizes`."""
    seen = set()
    edges = []
    attempts = 0
    while len(edges) < m and attempts < 60 * (m + 1):
        attempts += 1
        k = rng.choice(sizes)
        if k > n:
            continue
        e = tuple(sorted(rng.sample(range(1, n + 1), k)))
        if e not in seen:
            seen.add(e)
            edges.append(e)
    return Hypergraph(n, edges)


def random_graph(rng, n, m):
    return random_hypergraph(rng, n, m, (2,))


def random_weighted_uniform(rng, n, m, k, max_num=20, max_den=10):
    from fractions import Fraction

    g = random_hypergraph(rng, n, m, (k,))
    weights = {
        v: Fraction(rng.randint(1, max_num), rng.randint(1, max_den))
        for v in range(1, n + 1)
    }
    return WeightedHypergraph(g.n, g.edges, weights)


def hub_hypergraph(rng, n, m, hubs):
    """3-uniform edges that all meet a small hub set, so cover number <= hubs."""
    hub_set = rng.sample(range(1, n + 1), hubs)
    seen = set()
    edges = []
    attempts = 0
    while len(edges) < m and attempts < 60 * (m + 1):
        attempts += 1
        h = rng.choice(hub_set)
        rest = rng.sample([v for v in range(1, n + 1) if v != h], 2)
        e = tuple(sorted([h] + rest))
        if e not in seen:
            seen.add(e)
            edges.append(e)
    return Hypergraph(n, edges)


def max_stable_brute(g):
    """Independent oracle: scan the full subset lattice, return the optimum size."""
    masks = g.edge_masks()
    best = 0
    for s in range(1 << g.n):
        if any(s & em == em for em in masks):
            continue
        c = s.bit_count()
        if c > best:
            best = c
    return best


def max_weight_stable_brute(g):
    """Independent oracle for weighted instances: best (set, weight) pair.

    First optimum in subset-integer order; only sizes that matter here
    (n <= 14 or so).
    """
    masks = g.unweighted().edge_masks()
    best_w = 0
    best_s = frozenset()
    for s in range(1 << g.n):
        if any(s & em == em for em in masks):
            continue
        w = sum(g.weight(v) for v in range(1, g.n + 1) if s >> (v - 1) & 1)
        if w > best_w:
            best_w = w
            best_s = frozenset(v for v in range(1, g.n + 1) if s >> (v - 1) & 1)
    return best_s, best_w


def max_matching_brute(g):
    """Maximum matching size by scanning subsets of the edge list."""
    best = 0
    m = len(g.edges)
    for pick in range(1 << m):
        used = set()
        ok = True
        size = 0
        for i in range(m):
            if pick >> i & 1:
                e = set(g.edges[i])
                if used & e:
                    ok = False
                    break
                used |= e
                size += 1
        if ok and size > best:
            best = size
    return best


def two_sat_brute(inst):
    """Enumerate all assignments; return one satisfying dict or None."""
    for bits in range(1 << inst.nvars):
        assign = {v: bool(bits >> (v - 1) & 1) for v in range(1, inst.nvars + 1)}
        if inst.satisfies(assign):
            return assign
    return None


# --- gadget mutation catalog ------------------------------------------------

def _with_edges(art, edges):
    g = Hypergraph(art.hypergraph.n, edges)
    return GadgetArtifact(
        hypergraph=g,
        labeled=None,
        certificate=art.certificate,
        provenance=art.provenance,
    )


def _with_cert(art, cert):
    return GadgetArtifact(
        hypergraph=art.hypergraph,
        labeled=art.labeled,
        certificate=cert,
        provenance=art.provenance,
    )


def _with_prov(art, prov):
    return GadgetArtifact(
        hypergraph=art.hypergraph,
        labeled=art.labeled,
        certificate=art.certificate,
        provenance=prov,
    )


def gadget_mutations(art):
    """Twelve tampered variants of a dichotomy artifact, each of which every
    honest verifier run must flag.  Returns (name, mutated artifact) pairs.
    """
    cert = art.certificate
    edges = list(art.hypergraph.edges)
    roles = {role: v for v, role in art.provenance.items()}
    out = []

    # 1. drop the last edge outright
    out.append(("drop-edge", _with_edges(art, edges[:-1])))

    # 2. add a spurious triple inside the first core block
    out.append(("add-edge", _with_edges(art, edges + [(4, 5, 6)])))

    # 3. relabel a core edge: {s1,t1,a} becomes {s1,t1,b}
    swapped = list(edges)
    idx = swapped.index((1, 4, 5))
    swapped[idx] = (2, 4, 5)
    out.append(("relabel-core-edge", _with_edges(art, swapped)))

    # 4. remove the {s,u,b} edge of the second core block
    s2, u2 = roles["H2.s"], roles["H2.u"]
    victim = tuple(sorted((s2, u2, 2)))
    pruned = [e for e in edges if e != victim]
    assert len(pruned) == len(edges) - 1
    out.append(("remove-core-block-edge", _with_edges(art, pruned)))

    # 5. remove a hub edge of the first tuple block
    r1, r2 = roles["T0.H0.r1"], roles["T0.H0.r2"]
    victim = tuple(sorted((r1, r2, 1)))
    pruned = [e for e in edges if e != victim]
    assert len(pruned) == len(edges) - 1
    out.append(("remove-template-hub-edge", _with_edges(art, pruned)))

    # 6. remove the wiring edge {T0.H1.s, r1, H1.s}
    ts = roles["T0.H1.s"]
    victim = tuple(sorted((ts, r1, roles["H1.s"])))
    pruned = [e for e in edges if e != victim]
    assert len(pruned) == len(edges) - 1
    out.append(("remove-connecting-edge", _with_edges(art, pruned)))

    # 7. flip one witness value
    w = dict(cert.witness)
    w[roles["H1.s"]] = 3 if w[roles["H1.s"]] != 3 else 1
    out.append(
        (
            "witness-flip",
            _with_cert(art, GadgetCertificate(cert.kind, cert.anchors, cert.z, w)),
        )
    )

    # 8. merge two anchor colors in the witness
    w = dict(cert.witness)
    w[cert.anchors[1]] = w[cert.anchors[0]]
    out.append(
        (
            "witness-anchor-merge",
            _with_cert(art, GadgetCertificate(cert.kind, cert.anchors, cert.z, w)),
        )
    )

    # 9. drop the last vertex from the small cover
    z = tuple(v for v in cert.z if v != 19)
    out.append(
        (
            "z-drop",
            _with_cert(
                art, GadgetCertificate(cert.kind, cert.anchors, z, cert.witness)
            ),
        )
    )

    # 10. declare a wrong anchor triple
    out.append(
        (
            "anchor-swap",
            _with_cert(
                art,
                GadgetCertificate(cert.kind, (1, 2, 19), cert.z, cert.witness),
            ),
        )
    )

    # 11. swap two provenance roles
    prov = dict(art.provenance)
    va, vb = roles["T0.H1.s"], roles["T0.H1.t"]
    prov[va], prov[vb] = prov[vb], prov[va]
    out.append(("prov-swap", _with_prov(art, prov)))

    # 12. lie about the kind
    out.append(
        (
            "kind-flip",
            _with_cert(
                art,
                GadgetCertificate(
                    "g2" if cert.kind == "g1" else "g1",
                    cert.anchors,
                    cert.z,
                    cert.witness,
                ),
            ),
        )
    )

    assert len(out) >= 10
    return out
