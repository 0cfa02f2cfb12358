import random
from fractions import Fraction

import pytest

from conftest import random_hypergraph, random_weighted_uniform
from hypercolor import (
    Hypergraph,
    PartialColoring,
    WeightedHypergraph,
    brute_force_color,
    brute_force_extend,
    build_g1,
    build_g2,
    is_k_uniform,
    is_linear,
    ltimes,
    max_weight_stable_set_bruteforce,
    mwss_gadget,
    uplift_bounded,
    uplift_precoloring,
    uplift_uniform,
    validate_coloring,
)
from hypercolor.instances import complete_graph, matching_hypergraph


class TestLtimes:
    def test_triangle_times_one_triple(self):
        g = ltimes(complete_graph(3), matching_hypergraph(1, 3))
        assert g.n == 6 and g.m == 6
        assert g.edges[:3] == ((1, 2), (1, 3), (2, 3))
        # the single shifted triple, extended by each core vertex in turn
        assert g.edges[3:] == ((1, 4, 5, 6), (2, 4, 5, 6), (3, 4, 5, 6))

    def test_empty_h(self):
        g = ltimes(complete_graph(2), Hypergraph(3, []))
        assert g.n == 5 and g.edges == ((1, 2),)

    def test_edgeless_core(self):
        g = ltimes(Hypergraph(2, []), Hypergraph(2, [(1, 2)]))
        assert g.edges == ((1, 3, 4), (2, 3, 4))


class TestUpliftBounded:
    def test_shape(self):
        h = Hypergraph(3, [(1, 2), (2, 3)])
        g = uplift_bounded(h, 3)
        assert g.n == 6
        assert g.m == 3 + 2 * 3  # K_3 plus each edge extended by each of 3
        assert max(len(e) for e in g.edges) == 3

    def test_colorability_preserved(self):
        rng = random.Random(881)
        for _ in range(40):
            n = rng.randint(1, 6)
            h = random_hypergraph(rng, n, rng.randint(0, 2 * n), (1, 2, 3))
            r = rng.randint(1, 3)
            g = uplift_bounded(h, r)
            assert (brute_force_color(h, r) is None) == (
                brute_force_color(g, r) is None
            ), (h.edges, r)

    def test_rejects(self):
        with pytest.raises(ValueError):
            uplift_bounded(Hypergraph(1, []), 0)


class TestUpliftUniform:
    def test_shape(self):
        # 3-uniform input at r=2: core is the complete 4-uniform on 4 vertices
        h = matching_hypergraph(1, 3)
        g = uplift_uniform(h, r=2, k=3)
        assert g.n == 4 + 3
        assert g.m == 1 + 1 * 4
        assert is_k_uniform(g, 4)

    def test_colorability_preserved(self):
        rng = random.Random(882)
        for _ in range(25):
            n = rng.randint(2, 5)
            h = random_hypergraph(rng, n, rng.randint(0, n + 2), (2,))
            g = uplift_uniform(h, r=2, k=2)
            assert (brute_force_color(h, 2) is None) == (
                brute_force_color(g, 2) is None
            ), h.edges

    def test_core_alone_needs_r_colors(self):
        g = uplift_uniform(Hypergraph(2, [(1, 2)]), r=3, k=2)
        # core: complete 3-uniform on 5 vertices; 3-colorable, not 2-colorable
        assert brute_force_color(g, 3) is not None
        assert brute_force_color(g, 2) is None

    def test_rejects_nonuniform(self):
        with pytest.raises(ValueError, match="2-uniform"):
            uplift_uniform(Hypergraph(3, [(1, 2, 3)]), r=2, k=2)


class TestUpliftPrecoloring:
    def test_shape(self):
        h = Hypergraph(2, [(1, 2)])
        g, pre = uplift_precoloring(h, 3)
        assert g.n == 5
        assert pre.colors == {1: 1, 2: 2, 3: 3}
        assert g.edges == ((1, 4, 5), (2, 4, 5), (3, 4, 5))

    def test_extension_encodes_coloring(self):
        rng = random.Random(883)
        for _ in range(40):
            n = rng.randint(1, 6)
            h = random_hypergraph(rng, n, rng.randint(0, 2 * n), (1, 2, 3))
            r = rng.randint(1, 3)
            g, pre = uplift_precoloring(h, r)
            ext = brute_force_extend(g, r, pre)
            plain = brute_force_color(h, r)
            assert (ext is None) == (plain is None), (h.edges, r)
            if ext is not None:
                assert validate_coloring(g, r, ext)


class TestMwssGadget:
    def test_shape_and_weights(self):
        wg = WeightedHypergraph(3, [(1, 2, 3)], {2: Fraction(5, 2)})
        out = mwss_gadget(wg)
        assert out.n == 4
        assert out.edges == ((1, 2, 3, 4),)
        assert out.weight(4) == Fraction(1) + Fraction(5, 2) + 2
        assert out.weight(2) == Fraction(5, 2)

    def test_rejects_nonuniform(self):
        with pytest.raises(ValueError, match="uniform"):
            mwss_gadget(WeightedHypergraph(3, [(1, 2), (1, 2, 3)]))

    def test_optimum_shifts_exactly(self):
        rng = random.Random(884)
        for _ in range(50):
            n = rng.randint(1, 10)
            k = rng.choice((2, 3))
            wg = random_weighted_uniform(rng, n, rng.randint(0, 2 * n), k)
            opt_in, w_in = max_weight_stable_set_bruteforce(wg)
            out = mwss_gadget(wg)
            opt_out, w_out = max_weight_stable_set_bruteforce(out)
            v = wg.n + 1
            assert v in opt_out
            assert opt_out - {v} == opt_in
            assert w_out == w_in + wg.total_weight(range(1, wg.n + 1)) + 1


class TestDichotomyGadgets:
    def test_g1_counts(self):
        art = build_g1()
        g = art.hypergraph
        assert g.n == 5139 and g.m == 11800
        assert is_k_uniform(g, 3) and is_linear(g)
        assert art.certificate.kind == "g1"
        assert art.certificate.anchors == (1, 2, 3)
        assert art.certificate.z == tuple(range(1, 20))
        assert len(art.provenance) == g.n
        assert art.labeled is not None and art.labeled.m == g.m

    def test_g2_counts(self):
        art = build_g2()
        g = art.hypergraph
        assert g.n == 5139 and g.m == 11801
        assert (1, 2, 3) in g.edges
        assert art.certificate.kind == "g2"

    def test_witness_proper_and_split(self):
        for art in (build_g1(), build_g2()):
            w = art.certificate.witness
            assert validate_coloring(art.hypergraph, 3, w)
            assert {w[1], w[2], w[3]} == {1, 2, 3}

    def test_roles_unique(self):
        art = build_g1()
        roles = set(art.provenance.values())
        assert len(roles) == art.hypergraph.n
        assert "anchor.a" in roles and "T255.H4.v" in roles

    def test_g1_no_anchor_only_edge(self):
        g1 = build_g1().hypergraph
        anchors = {1, 2, 3}
        assert not any(anchors.issuperset(e) for e in g1.edges)

    def test_every_edge_meets_z(self):
        art = build_g2()
        z = set(art.certificate.z)
        assert all(z.intersection(e) for e in art.hypergraph.edges)
