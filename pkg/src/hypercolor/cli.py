"""Command line interface.

Exit codes: 0 success/colorable, 1 uncolorable or a failed check,
2 bad input or usage, 3 promise violation, 4 brute-force cap exceeded.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional

from . import __version__
from .formats import (
    ParseError,
    parse_certificate,
    parse_coloring,
    parse_hypergraph,
    parse_precoloring,
    parse_stable_set,
    serialize_certificate,
    serialize_coloring,
    serialize_hypergraph,
    serialize_stable_set,
)
from .gadgets import (
    build_g1,
    build_g2,
    ltimes,
    mwss_gadget,
    uplift_bounded,
    uplift_precoloring,
    uplift_uniform,
)
from .hypercore import (
    Hypergraph,
    PartialColoring,
    WeightedHypergraph,
    find_induced_one_edge,
    greedy_maximal_matching,
    is_k_bounded,
    is_k_uniform,
    is_linear,
    is_stable,
    validate_coloring,
)
from .reduction import reduce_3col_linear
from .solvers import (
    CapExceededError,
    PromiseViolationError,
    Verdict,
    brute_force_color,
    brute_force_extend,
    max_stable_set_bounded,
    max_weight_stable_set_bruteforce,
    precolor_extend_bounded,
    solve_2col_3bounded,
    solve_2col_htfree,
)
from .verify import (
    artifact_from_files,
    check_certificate,
    reduction_from_files,
    verify_g1_dichotomy,
    verify_reduction,
)

PROG = "hypercolor"

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2
EXIT_PROMISE = 3
EXIT_CAP = 4


def _stamp() -> list[str]:
    return [f"{PROG} {__version__}"]


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write_out(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _load_plain(path: str) -> Hypergraph:
    g = parse_hypergraph(_read(path))
    if isinstance(g, WeightedHypergraph):
        return g.unweighted()
    return g


def _load_weighted(path: str) -> WeightedHypergraph:
    g = parse_hypergraph(_read(path))
    if isinstance(g, WeightedHypergraph):
        return g
    return WeightedHypergraph(g.n, g.edges)


def _matching_comments(cert) -> list[str]:
    out = []
    if cert is not None:
        edges = ", ".join("{" + " ".join(map(str, e)) + "}" for e in cert.edges)
        out.append(f"violating matching: {edges}")
    return out


def _emit_result(res, out: Optional[str]) -> int:
    comments = _stamp()
    if res.verdict is Verdict.PROMISE_VIOLATION:
        comments += _matching_comments(res.certificate)
    _write_out(serialize_coloring(res.verdict.value, res.coloring, comments), out)
    if res.verdict is Verdict.COLORABLE:
        return EXIT_OK
    if res.verdict is Verdict.PROMISE_VIOLATION:
        return EXIT_PROMISE
    return EXIT_NEGATIVE


def _cmd_solve(args: argparse.Namespace) -> int:
    mode = args.mode
    if mode == "2col3b":
        g = _load_plain(args.input)
        res = solve_2col_3bounded(g, args.s, force=args.force, threads=args.threads)
        return _emit_result(res, args.out)
    if mode == "precolor":
        g = _load_plain(args.input)
        pre = (
            parse_precoloring(_read(args.pre), args.r)
            if args.pre
            else PartialColoring(args.r, {})
        )
        trace = (lambda line: print(line, file=sys.stderr)) if args.trace else None
        res = precolor_extend_bounded(g, args.r, args.k, args.s, pre, trace=trace)
        return _emit_result(res, args.out)
    if mode == "htfree":
        g = _load_plain(args.input)
        res = solve_2col_htfree(g, args.t, threads=args.threads)
        return _emit_result(res, args.out)
    if mode == "stable":
        g = _load_plain(args.input)
        stable = max_stable_set_bounded(g, args.k, args.s, threads=args.threads)
        _write_out(serialize_stable_set(stable, _stamp()), args.out)
        return EXIT_OK
    if mode == "mwss":
        wg = _load_weighted(args.input)
        stable, weight = max_weight_stable_set_bruteforce(wg, cap=args.cap)
        comments = _stamp() + [f"weight {weight.numerator}/{weight.denominator}"]
        _write_out(serialize_stable_set(stable, comments), args.out)
        return EXIT_OK
    if mode == "brute":
        g = _load_plain(args.input)
        if args.pre:
            pre = parse_precoloring(_read(args.pre), args.r)
            coloring = brute_force_extend(g, args.r, pre, cap=args.cap)
        else:
            coloring = brute_force_color(g, args.r, cap=args.cap)
        status = "COLORABLE" if coloring is not None else "UNCOLORABLE"
        _write_out(serialize_coloring(status, coloring, _stamp()), args.out)
        return EXIT_OK if coloring is not None else EXIT_NEGATIVE
    raise AssertionError(mode)


def _cmd_gadget(args: argparse.Namespace) -> int:
    kind = args.kind
    if kind in ("g1", "g2"):
        art = build_g1() if kind == "g1" else build_g2()
        cert = art.certificate
        _write_out(
            serialize_hypergraph(art.hypergraph, _stamp() + [f"gadget {kind}"]),
            args.out_prefix + ".hygr",
        )
        _write_out(
            serialize_certificate(
                cert.kind,
                anchors=cert.anchors,
                z=cert.z,
                witness=cert.witness,
                prov=art.provenance,
                comments=_stamp(),
            ),
            args.out_prefix + ".cert",
        )
        return EXIT_OK
    if kind == "reduce3col":
        gstar = _load_plain(args.input)
        red = reduce_3col_linear(gstar)
        _write_out(
            serialize_hypergraph(red.hypergraph, _stamp() + ["gadget reduce3col"]),
            args.out_prefix + ".hygr",
        )
        _write_out(
            serialize_certificate(
                "reduction",
                z=sorted(red.hitting_set),
                fprime=red.edge_coloring,
                prov=red.provenance,
                comments=_stamp(),
            ),
            args.out_prefix + ".cert",
        )
        return EXIT_OK
    if kind == "ltimes":
        core = _load_plain(args.core)
        h = _load_plain(args.input)
        _write_out(serialize_hypergraph(ltimes(core, h), _stamp()), args.out)
        return EXIT_OK
    if kind == "uplift-bounded":
        h = _load_plain(args.input)
        _write_out(serialize_hypergraph(uplift_bounded(h, args.r), _stamp()), args.out)
        return EXIT_OK
    if kind == "uplift-uniform":
        h = _load_plain(args.input)
        _write_out(
            serialize_hypergraph(uplift_uniform(h, args.r, args.k), _stamp()), args.out
        )
        return EXIT_OK
    if kind == "uplift-precolor":
        h = _load_plain(args.input)
        g, pre = uplift_precoloring(h, args.r)
        _write_out(serialize_hypergraph(g, _stamp()), args.out)
        lines = [f"c {c}" for c in _stamp()]
        lines += [f"k {v} {pre.colors[v]}" for v in pre.domain()]
        _write_out("\n".join(lines) + "\n", args.pre_out)
        return EXIT_OK
    if kind == "mwss":
        wg = _load_weighted(args.input)
        _write_out(serialize_hypergraph(mwss_gadget(wg), _stamp()), args.out)
        return EXIT_OK
    raise AssertionError(kind)


def _check_line(name: str, passed: bool, detail: str = "") -> int:
    word = "PASS" if passed else "FAIL"
    suffix = f" {detail}" if detail else ""
    print(f"CHECK {name} {word}{suffix}")
    return EXIT_OK if passed else EXIT_NEGATIVE


def _cmd_check(args: argparse.Namespace) -> int:
    what = args.what
    g = _load_plain(args.input)
    if what == "linear":
        return _check_line("linear", is_linear(g))
    if what == "uniform":
        return _check_line("uniform", is_k_uniform(g, args.k), f"k={args.k}")
    if what == "bounded":
        return _check_line("bounded", is_k_bounded(g, args.k), f"k={args.k}")
    if what == "stable":
        vs = parse_stable_set(_read(args.aux))
        return _check_line("stable", is_stable(g, vs), f"{len(vs)} vertices")
    if what == "coloring":
        _, colors = parse_coloring(_read(args.aux))
        r = args.r if args.r else max(colors.values(), default=1)
        return _check_line("coloring", validate_coloring(g, r, colors), f"r={r}")
    if what == "htfree":
        w = find_induced_one_edge(g, args.t)
        return _check_line(
            "htfree", w is None, "" if w is None else f"witness {list(w)}"
        )
    if what == "matching":
        m = greedy_maximal_matching(g)
        covered = set(m.covered())
        maximal = all(not covered.isdisjoint(e) for e in g.edges)
        return _check_line("matching", maximal, f"greedy size {m.size}")
    raise AssertionError(what)


def _cmd_verify(args: argparse.Namespace) -> int:
    what = args.what
    if what in ("g1", "g2"):
        if args.input:
            if not args.cert:
                raise ValueError("certificate file required alongside a hypergraph file")
            g = _load_plain(args.input)
            art = artifact_from_files(g, parse_certificate(_read(args.cert)))
        else:
            art = build_g1() if what == "g1" else build_g2()
        rep = verify_g1_dichotomy(art)
    elif what == "certificate":
        g = _load_plain(args.input)
        art = artifact_from_files(g, parse_certificate(_read(args.cert)))
        rep = check_certificate(art.hypergraph, art.certificate)
    elif what == "reduction":
        g = _load_plain(args.input)
        gstar = _load_plain(args.graph)
        red = reduction_from_files(g, parse_certificate(_read(args.cert)), gstar)
        coloring = None
        if args.coloring:
            _, coloring = parse_coloring(_read(args.coloring))
        rep = verify_reduction(red, coloring)
    else:
        raise AssertionError(what)
    sys.stdout.write(rep.render())
    return EXIT_OK if rep.ok else EXIT_NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog=PROG,
        description="hypergraph coloring and stable sets under matching-number promises",
    )
    ap.add_argument("--version", action="version", version=f"{PROG} {__version__}")
    ap.add_argument(
        "--threads",
        type=int,
        default=1,
        help="worker threads for branch scans (results are identical for any value)",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    sv = sub.add_parser("solve", help="run a solver on a hypergraph file")
    svs = sv.add_subparsers(dest="mode", required=True)

    p = svs.add_parser("2col3b", help="2-coloring, 3-bounded, promise nu <= s")
    p.add_argument("input")
    p.add_argument("--s", type=int, required=True, help="promised matching bound")
    p.add_argument("--force", action="store_true", help="continue past promise violation")
    p.add_argument("--out")

    p = svs.add_parser("precolor", help="precoloring extension, k-bounded, s <= r-1")
    p.add_argument("input")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--pre", help="precoloring file (k <v> <color> lines)")
    p.add_argument("--trace", action="store_true", help="round trace on stderr")
    p.add_argument("--out")

    p = svs.add_parser("htfree", help="2-coloring without the t+3 one-edge pattern")
    p.add_argument("input")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--out")

    p = svs.add_parser("stable", help="maximum stable set, k-uniform, promise nu <= s")
    p.add_argument("input")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--out")

    p = svs.add_parser("mwss", help="maximum-weight stable set by brute force")
    p.add_argument("input")
    p.add_argument("--cap", type=int, default=24, help="vertex-count cap")
    p.add_argument("--out")

    p = svs.add_parser("brute", help="brute-force r-coloring or extension")
    p.add_argument("input")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--pre", help="precoloring file to extend")
    p.add_argument("--cap", type=int, default=1 << 28, help="work cap on r^free")
    p.add_argument("--out")

    gd = sub.add_parser("gadget", help="build gadgets and reductions")
    gds = gd.add_subparsers(dest="kind", required=True)
    for kind in ("g1", "g2"):
        p = gds.add_parser(kind, help=f"dichotomy gadget {kind}")
        p.add_argument("--out-prefix", required=True)
    p = gds.add_parser("reduce3col", help="3-coloring to linear 3-uniform 2-coloring")
    p.add_argument("input", help="graph file (2-uniform), max degree 4")
    p.add_argument("--out-prefix", required=True)
    p = gds.add_parser("ltimes", help="labeled product core x hypergraph")
    p.add_argument("core")
    p.add_argument("input")
    p.add_argument("--out")
    p = gds.add_parser("uplift-bounded", help="add K_r core")
    p.add_argument("input")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--out")
    p = gds.add_parser("uplift-uniform", help="add complete (k+1)-uniform core")
    p.add_argument("input")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--out")
    p = gds.add_parser("uplift-precolor", help="edgeless precolored core")
    p.add_argument("input")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--out")
    p.add_argument("--pre-out", required=True, help="file for the induced precoloring")
    p = gds.add_parser("mwss", help="universal-vertex weight gadget")
    p.add_argument("input")
    p.add_argument("--out")

    ck = sub.add_parser("check", help="single predicates on files")
    cks = ck.add_subparsers(dest="what", required=True)
    for what in ("linear", "matching"):
        p = cks.add_parser(what)
        p.add_argument("input")
    for what in ("uniform", "bounded"):
        p = cks.add_parser(what)
        p.add_argument("input")
        p.add_argument("--k", type=int, required=True)
    p = cks.add_parser("stable")
    p.add_argument("input")
    p.add_argument("aux", help="stable-set file (v <vertex> lines)")
    p = cks.add_parser("coloring")
    p.add_argument("input")
    p.add_argument("aux", help="coloring file (v <vertex> <color> lines)")
    p.add_argument("--r", type=int, help="color bound (default: largest used)")
    p = cks.add_parser("htfree")
    p.add_argument("input")
    p.add_argument("--t", type=int, required=True)

    vf = sub.add_parser("verify", help="multi-line verification reports")
    vfs = vf.add_subparsers(dest="what", required=True)
    p = vfs.add_parser("certificate", help="gadget certificate desk checks")
    p.add_argument("input")
    p.add_argument("cert")
    for what in ("g1", "g2"):
        p = vfs.add_parser(what, help=f"dichotomy checks on {what} (fresh build if no files)")
        p.add_argument("input", nargs="?")
        p.add_argument("cert", nargs="?")
    p = vfs.add_parser("reduction", help="reduction output checks")
    p.add_argument("input")
    p.add_argument("cert")
    p.add_argument("graph", help="the original graph file")
    p.add_argument("--coloring", help="proper 3-coloring of the graph to lift")

    return ap


def main(argv: Optional[list[str]] = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        if args.command == "solve":
            return _cmd_solve(args)
        if args.command == "gadget":
            return _cmd_gadget(args)
        if args.command == "check":
            return _cmd_check(args)
        if args.command == "verify":
            return _cmd_verify(args)
        raise AssertionError(args.command)
    except PromiseViolationError as exc:
        print(f"promise violation: {exc}", file=sys.stderr)
        return EXIT_PROMISE
    except CapExceededError as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (ParseError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
