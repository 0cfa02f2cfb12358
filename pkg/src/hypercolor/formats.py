"""Line-oriented file formats.

Hypergraph files::

    c <comment text>
    p hygr <n> <m>
    e <v1> <v2> ...
    w <v> <num>/<den>

The ``p`` line comes first (comments may precede it), exactly m ``e`` lines
follow, and optional ``w`` lines attach positive rational vertex weights
(default 1).  Precolorings use ``k <v> <color>`` lines.  Solver output files
carry a status line ``s COLORABLE|UNCOLORABLE|PROMISE-VIOLATION`` followed by
``v <vertex> <color>`` lines, or ``s STABLE <size>`` followed by bare
``v <vertex>`` lines.  Certificate sidecars use ``kind``, ``anchor``, ``Z``,
``witness``, ``prov`` and ``fprime`` lines.

All writers are deterministic byte for byte: fixed ordering, no timestamps.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .hypercore import Hypergraph, PartialColoring, WeightedHypergraph

__all__ = [
    "ParseError",
    "parse_hypergraph",
    "serialize_hypergraph",
    "parse_precoloring",
    "serialize_precoloring",
    "parse_coloring",
    "serialize_coloring",
    "parse_stable_set",
    "serialize_stable_set",
    "parse_certificate",
    "serialize_certificate",
]

COLORING_STATUSES = ("COLORABLE", "UNCOLORABLE", "PROMISE-VIOLATION")


class ParseError(ValueError):
    """Input file rejected; message names the 1-based line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


def _significant_lines(text: str):
    for i, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line == "c" or line.startswith("c "):
            continue
        yield i, line


def _int(tok: str, line_no: int, what: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(line_no, f"bad {what} {tok!r}") from None


def parse_hypergraph(text: str):
    """Parse a hypergraph file.

    Returns a Hypergraph, or a WeightedHypergraph when any ``w`` line is
    present.
    """
    n: Optional[int] = None
    m: Optional[int] = None
    edges: list[tuple[int, ...]] = []
    seen: set[tuple[int, ...]] = set()
    weights: dict[int, Fraction] = {}
    last_line = 0
    for line_no, line in _significant_lines(text):
        last_line = line_no
        toks = line.split()
        if toks[0] == "p":
            if n is not None:
                raise ParseError(line_no, "second p line")
            if len(toks) != 4 or toks[1] != "hygr":
                raise ParseError(line_no, "expected 'p hygr <n> <m>'")
            n = _int(toks[2], line_no, "vertex count")
            m = _int(toks[3], line_no, "edge count")
            if n < 0 or m < 0:
                raise ParseError(line_no, "negative count in p line")
        elif toks[0] == "e":
            if n is None:
                raise ParseError(line_no, "e line before p line")
            verts = [_int(t, line_no, "vertex") for t in toks[1:]]
            if not verts:
                raise ParseError(line_no, "empty edge")
            for v in verts:
                if v < 1 or v > n:
                    raise ParseError(line_no, f"vertex {v} out of range 1..{n}")
            e = tuple(sorted(verts))
            if len(set(e)) != len(e):
                raise ParseError(line_no, f"repeated vertex in edge {verts}")
            if e in seen:
                raise ParseError(line_no, f"duplicate edge {list(e)}")
            seen.add(e)
            edges.append(e)
        elif toks[0] == "w":
            if n is None:
                raise ParseError(line_no, "w line before p line")
            if len(toks) != 3:
                raise ParseError(line_no, "expected 'w <v> <num>/<den>'")
            v = _int(toks[1], line_no, "vertex")
            if v < 1 or v > n:
                raise ParseError(line_no, f"vertex {v} out of range 1..{n}")
            if v in weights:
                raise ParseError(line_no, f"second weight for vertex {v}")
            num, _, den = toks[2].partition("/")
            w_num = _int(num, line_no, "weight numerator")
            w_den = _int(den, line_no, "weight denominator") if den else 1
            if w_den == 0:
                raise ParseError(line_no, "zero weight denominator")
            w = Fraction(w_num, w_den)
            if w <= 0:
                raise ParseError(line_no, f"weight {w} not positive")
            weights[v] = w
        else:
            raise ParseError(line_no, f"unknown line type {toks[0]!r}")
    if n is None or m is None:
        raise ParseError(last_line or 1, "missing p line")
    if len(edges) != m:
        raise ParseError(last_line or 1, f"p line promises {m} edges, found {len(edges)}")
    if weights:
        return WeightedHypergraph(n, edges, weights)
    return Hypergraph(n, edges)


def serialize_hypergraph(g, comments: Sequence[str] = ()) -> str:
    out = [f"c {c}" for c in comments]
    out.append(f"p hygr {g.n} {g.m}")
    for e in g.edges:
        out.append("e " + " ".join(str(v) for v in e))
    if isinstance(g, WeightedHypergraph):
        for v in range(1, g.n + 1):
            w = g.weight(v)
            if w != 1:
                out.append(f"w {v} {w.numerator}/{w.denominator}")
    return "\n".join(out) + "\n"


def parse_precoloring(text: str, r: int) -> PartialColoring:
    colors: dict[int, int] = {}
    for line_no, line in _significant_lines(text):
        toks = line.split()
        if toks[0] != "k" or len(toks) != 3:
            raise ParseError(line_no, "expected 'k <vertex> <color>'")
        v = _int(toks[1], line_no, "vertex")
        c = _int(toks[2], line_no, "color")
        if v in colors:
            raise ParseError(line_no, f"vertex {v} precolored twice")
        if not 1 <= c <= r:
            raise ParseError(line_no, f"color {c} outside 1..{r}")
        if v < 1:
            raise ParseError(line_no, f"bad vertex {v}")
        colors[v] = c
    return PartialColoring(r, colors)


def serialize_precoloring(pc: PartialColoring, comments: Sequence[str] = ()) -> str:
    out = [f"c {c}" for c in comments]
    for v in pc.domain():
        out.append(f"k {v} {pc.colors[v]}")
    return "\n".join(out) + "\n"


def parse_coloring(text: str):
    """Parse a solver output file: (status or None, {vertex: color})."""
    status: Optional[str] = None
    colors: dict[int, int] = {}
    for line_no, line in _significant_lines(text):
        toks = line.split()
        if toks[0] == "s":
            if status is not None:
                raise ParseError(line_no, "second s line")
            if len(toks) != 2 or toks[1] not in COLORING_STATUSES:
                raise ParseError(line_no, f"bad status line {line!r}")
            status = toks[1]
        elif toks[0] == "v":
            if len(toks) != 3:
                raise ParseError(line_no, "expected 'v <vertex> <color>'")
            v = _int(toks[1], line_no, "vertex")
            c = _int(toks[2], line_no, "color")
            if v in colors:
                raise ParseError(line_no, f"vertex {v} colored twice")
            colors[v] = c
        else:
            raise ParseError(line_no, f"unknown line type {toks[0]!r}")
    return status, colors


def serialize_coloring(
    status: str, coloring: Optional[dict[int, int]], comments: Sequence[str] = ()
) -> str:
    if status not in COLORING_STATUSES:
        raise ValueError(f"bad status {status!r}")
    out = [f"c {c}" for c in comments]
    out.append(f"s {status}")
    if coloring:
        for v in sorted(coloring):
            out.append(f"v {v} {coloring[v]}")
    return "\n".join(out) + "\n"


def parse_stable_set(text: str) -> tuple[int, ...]:
    size: Optional[int] = None
    verts: list[int] = []
    for line_no, line in _significant_lines(text):
        toks = line.split()
        if toks[0] == "s":
            if len(toks) != 3 or toks[1] != "STABLE":
                raise ParseError(line_no, f"bad status line {line!r}")
            size = _int(toks[2], line_no, "size")
        elif toks[0] == "v" and len(toks) == 2:
            verts.append(_int(toks[1], line_no, "vertex"))
        else:
            raise ParseError(line_no, f"unknown line type {toks[0]!r}")
    if size is not None and size != len(verts):
        raise ParseError(1, f"s line promises {size} vertices, found {len(verts)}")
    return tuple(sorted(verts))


def serialize_stable_set(vertices: Iterable[int], comments: Sequence[str] = ()) -> str:
    vs = sorted(vertices)
    out = [f"c {c}" for c in comments]
    out.append(f"s STABLE {len(vs)}")
    for v in vs:
        out.append(f"v {v}")
    return "\n".join(out) + "\n"


def serialize_certificate(
    kind: str,
    anchors: Optional[Sequence[int]] = None,
    z: Sequence[int] = (),
    witness: Optional[dict[int, int]] = None,
    prov: Optional[dict[int, str]] = None,
    fprime: Optional[dict[tuple[int, int], int]] = None,
    comments: Sequence[str] = (),
) -> str:
    out = [f"c {c}" for c in comments]
    out.append(f"kind {kind}")
    if anchors:
        out.append("anchor " + " ".join(str(a) for a in anchors))
    if z:
        out.append("Z " + " ".join(str(v) for v in sorted(z)))
    if witness:
        for v in sorted(witness):
            out.append(f"witness {v} {witness[v]}")
    if fprime:
        for (u, v), k in sorted(fprime.items()):
            out.append(f"fprime {u} {v} {k}")
    if prov:
        for v in sorted(prov):
            out.append(f"prov {v} {prov[v]}")
    return "\n".join(out) + "\n"


def parse_certificate(text: str) -> dict:
    """Parse a certificate sidecar into a plain dict.

    Keys: kind (str or None), anchors (tuple or None), z (tuple), witness
    ({vertex: color}), prov ({vertex: role}), fprime ({(u, v): color}).
    """
    got: dict = {
        "kind": None,
        "anchors": None,
        "z": (),
        "witness": {},
        "prov": {},
        "fprime": {},
    }
    for line_no, line in _significant_lines(text):
        toks = line.split()
        if toks[0] == "kind" and len(toks) == 2:
            got["kind"] = toks[1]
        elif toks[0] == "anchor":
            got["anchors"] = tuple(_int(t, line_no, "anchor") for t in toks[1:])
        elif toks[0] == "Z":
            got["z"] = tuple(_int(t, line_no, "vertex") for t in toks[1:])
        elif toks[0] == "witness" and len(toks) == 3:
            got["witness"][_int(toks[1], line_no, "vertex")] = _int(
                toks[2], line_no, "color"
            )
        elif toks[0] == "fprime" and len(toks) == 4:
            u = _int(toks[1], line_no, "vertex")
            v = _int(toks[2], line_no, "vertex")
            got["fprime"][(min(u, v), max(u, v))] = _int(toks[3], line_no, "color")
        elif toks[0] == "prov" and len(toks) >= 3:
            got["prov"][_int(toks[1], line_no, "vertex")] = " ".join(toks[2:])
        else:
            raise ParseError(line_no, f"bad certificate line {line!r}")
    return got
