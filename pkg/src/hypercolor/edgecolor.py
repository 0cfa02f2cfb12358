"""Proper edge coloring of simple graphs with at most Delta+1 colors.

Fan-rotation algorithm.  The input is a 2-uniform Hypergraph; the output
maps each edge (as its stored, sorted tuple) to a color in 1..Delta+1.
Every tie is pinned (lowest free color, lowest-numbered fan vertex), so the
result is a pure function of the input.
"""

from __future__ import annotations

from .hypercore import Hypergraph, is_k_uniform

__all__ = ["misra_gries_edge_color", "max_degree", "is_proper_edge_coloring"]


def max_degree(g: Hypergraph) -> int:
    deg = [0] * (g.n + 1)
    for e in g.edges:
        for v in e:
            deg[v] += 1
    return max(deg, default=0)


def is_proper_edge_coloring(g: Hypergraph, coloring: dict[tuple[int, int], int]) -> bool:
    """Every edge colored, and no two edges at a vertex share a color."""
    if set(coloring) != set(g.edges):
        return False
    seen: set[tuple[int, int]] = set()
    for (u, v), c in coloring.items():
        if c < 1:
            return False
        if (u, c) in seen or (v, c) in seen:
            return False
        seen.add((u, c))
        seen.add((v, c))
    return True


def misra_gries_edge_color(g: Hypergraph) -> dict[tuple[int, int], int]:
    """Color the edges of a simple graph properly with <= Delta+1 colors."""
    if not is_k_uniform(g, 2):
        raise ValueError("input must be a simple graph (2-uniform)")
    palette = max_degree(g) + 1
    # at[x] maps color -> neighbor across the edge of that color at x.
    at: list[dict[int, int]] = [dict() for _ in range(g.n + 1)]
    colors: dict[tuple[int, int], int] = {}

    def assign(u: int, v: int, c: int) -> None:
        colors[(u, v) if u < v else (v, u)] = c
        at[u][c] = v
        at[v][c] = u

    def unassign(u: int, v: int) -> int:
        c = colors.pop((u, v) if u < v else (v, u))
        del at[u][c]
        del at[v][c]
        return c

    def free(x: int) -> int:
        for c in range(1, palette + 1):
            if c not in at[x]:
                return c
        raise AssertionError(f"no free color at vertex {x}")

    neighbors: list[list[int]] = [[] for _ in range(g.n + 1)]
    for u, v in g.edges:
        neighbors[u].append(v)
        neighbors[v].append(u)
    for adj in neighbors:
        adj.sort()

    def color_edge(u: int, v: int) -> None:
        # Maximal fan of u starting at v: each next edge's color must be
        # free at the previous fan vertex.  Lowest-numbered extension wins.
        fan = [v]
        in_fan = {v}
        while True:
            last = fan[-1]
            ext = None
            for w in neighbors[u]:
                if w in in_fan:
                    continue
                key = (u, w) if u < w else (w, u)
                cw = colors.get(key)
                if cw is not None and cw not in at[last]:
                    ext = w
                    break
            if ext is None:
                break
            fan.append(ext)
            in_fan.add(ext)

        c = free(u)
        d = free(fan[-1])

        if c != d:
            # Invert the c/d alternating path starting at u with a d-edge.
            path: list[tuple[int, int, int]] = []
            cur, want = u, d
            while want in at[cur]:
                nxt = at[cur][want]
                path.append((cur, nxt, want))
                cur = nxt
                want = c if want == d else d
            for a, b, _ in path:
                unassign(a, b)
            for a, b, old in path:
                assign(a, b, c if old == d else d)

        # First fan prefix still valid under current colors where d is free.
        w_idx = None
        for j, x in enumerate(fan):
            if j > 0:
                key = (u, x) if u < x else (x, u)
                if colors[key] in at[fan[j - 1]]:
                    break
            if d not in at[x]:
                w_idx = j
                break
        assert w_idx is not None, "fan lost its rotation target"

        # Rotate: shift colors one step toward v, then finish with d.
        shifted = []
        for i in range(w_idx):
            nxt = fan[i + 1]
            shifted.append((fan[i], unassign(u, nxt)))
        for x, col in shifted:
            assign(u, x, col)
        assign(u, fan[w_idx], d)

    for u, v in g.edges:
        color_edge(u, v)
    assert is_proper_edge_coloring(g, colors)
    return colors
