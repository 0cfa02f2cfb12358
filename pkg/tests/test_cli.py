import pytest

from hypercolor import parse_coloring, parse_hypergraph, parse_stable_set, validate_coloring
from hypercolor.cli import main
from hypercolor.instances import complete_graph, complete_uniform, fano
from hypercolor.formats import serialize_hypergraph

FANO = serialize_hypergraph(fano())
PATH4 = "p hygr 4 3\ne 1 2\ne 2 3\ne 3 4\n"
TRIPLES2 = "p hygr 6 2\ne 1 2 3\ne 4 5 6\n"


@pytest.fixture
def run(capsys):
    def _run(*argv):
        code = main(list(argv))
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    return _run


def _file(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


class TestSolveCommands:
    def test_2col3b_uncolorable(self, run, tmp_path):
        f = _file(tmp_path, "fano.hygr", FANO)
        code, out, _ = run("solve", "2col3b", f, "--s", "1")
        assert code == 1
        assert parse_coloring(out) == ("UNCOLORABLE", {})

    def test_2col3b_colorable_to_file(self, run, tmp_path):
        f = _file(tmp_path, "p.hygr", PATH4)
        out_path = tmp_path / "res.col"
        code, out, _ = run("solve", "2col3b", f, "--s", "3", "--out", str(out_path))
        assert code == 0 and out == ""
        status, colors = parse_coloring(out_path.read_text())
        assert status == "COLORABLE"
        assert validate_coloring(parse_hypergraph(PATH4), 2, colors)

    def test_2col3b_promise_violation(self, run, tmp_path):
        f = _file(tmp_path, "m2.hygr", TRIPLES2)
        code, out, _ = run("solve", "2col3b", f, "--s", "1")
        assert code == 3
        assert "s PROMISE-VIOLATION" in out
        assert "violating matching" in out

    def test_2col3b_force(self, run, tmp_path):
        f = _file(tmp_path, "m2.hygr", TRIPLES2)
        code, out, _ = run("solve", "2col3b", f, "--s", "1", "--force")
        assert code == 0
        status, colors = parse_coloring(out)
        assert status == "COLORABLE"
        assert validate_coloring(parse_hypergraph(TRIPLES2), 2, colors)

    def test_threads_byte_identical(self, run, tmp_path):
        f = _file(tmp_path, "p.hygr", PATH4)
        a = tmp_path / "a.col"
        b = tmp_path / "b.col"
        assert run("--threads", "1", "solve", "2col3b", f, "--s", "3", "--out", str(a))[0] == 0
        assert run("--threads", "8", "solve", "2col3b", f, "--s", "3", "--out", str(b))[0] == 0
        assert a.read_bytes() == b.read_bytes()

    def test_precolor_with_pins_and_trace(self, run, tmp_path):
        star = _file(tmp_path, "star.hygr", "p hygr 4 3\ne 1 2\ne 1 3\ne 1 4\n")
        pre = _file(tmp_path, "pins.pre", "k 1 2\n")
        code, out, err = run(
            "solve", "precolor", star, "--r", "2", "--k", "2", "--s", "1",
            "--pre", pre, "--trace",
        )
        assert code == 0
        status, colors = parse_coloring(out)
        assert status == "COLORABLE" and colors[1] == 2
        assert "round 0" in err

    def test_precolor_uncolorable(self, run, tmp_path):
        k3 = _file(tmp_path, "k3.hygr", serialize_hypergraph(complete_graph(3)))
        code, out, _ = run("solve", "precolor", k3, "--r", "2", "--k", "2", "--s", "1")
        assert code == 1
        assert parse_coloring(out)[0] == "UNCOLORABLE"

    def test_htfree(self, run, tmp_path):
        k53 = _file(tmp_path, "k53.hygr", serialize_hypergraph(complete_uniform(5, 3)))
        code, out, _ = run("solve", "htfree", k53, "--t", "1")
        assert code == 1

    def test_stable(self, run, tmp_path):
        f = _file(tmp_path, "fano.hygr", FANO)
        code, out, _ = run("solve", "stable", f, "--k", "3", "--s", "1")
        assert code == 0
        assert parse_stable_set(out) == (4, 5, 6, 7)

    def test_stable_promise_violation(self, run, tmp_path):
        f = _file(tmp_path, "m2.hygr", TRIPLES2)
        code, _, err = run("solve", "stable", f, "--k", "3", "--s", "1")
        assert code == 3
        assert "promise violation" in err

    def test_mwss(self, run, tmp_path):
        body = "p hygr 3 1\ne 1 2 3\nw 1 7/2\nw 2 1/2\nw 3 1/2\n"
        f = _file(tmp_path, "w.hygr", body)
        code, out, _ = run("solve", "mwss", f)
        assert code == 0
        assert parse_stable_set(out) == (1, 2)
        assert "weight 4/1" in out

    def test_mwss_cap(self, run, tmp_path):
        f = _file(tmp_path, "p.hygr", PATH4)
        code, _, err = run("solve", "mwss", f, "--cap", "3")
        assert code == 4
        assert "cap exceeded" in err

    def test_brute(self, run, tmp_path):
        k4 = _file(tmp_path, "k4.hygr", serialize_hypergraph(complete_graph(4)))
        assert run("solve", "brute", k4, "--r", "3")[0] == 1
        code, out, _ = run("solve", "brute", k4, "--r", "4")
        assert code == 0
        status, colors = parse_coloring(out)
        assert status == "COLORABLE"
        assert validate_coloring(complete_graph(4), 4, colors)


class TestCheckCommands:
    def test_linear(self, run, tmp_path):
        f = _file(tmp_path, "fano.hygr", FANO)
        code, out, _ = run("check", "linear", f)
        assert code == 0 and out == "CHECK linear PASS\n"
        bad = _file(tmp_path, "bad.hygr", "p hygr 4 2\ne 1 2 3\ne 1 2 4\n")
        code, out, _ = run("check", "linear", bad)
        assert code == 1 and out == "CHECK linear FAIL\n"

    def test_uniform_bounded(self, run, tmp_path):
        f = _file(tmp_path, "fano.hygr", FANO)
        assert run("check", "uniform", f, "--k", "3")[0] == 0
        assert run("check", "uniform", f, "--k", "2")[0] == 1
        assert run("check", "bounded", f, "--k", "3")[0] == 0
        assert run("check", "bounded", f, "--k", "2")[0] == 1

    def test_stable(self, run, tmp_path):
        f = _file(tmp_path, "fano.hygr", FANO)
        good = _file(tmp_path, "s.txt", "s STABLE 2\nv 4\nv 5\n")
        assert run("check", "stable", f, good)[0] == 0
        bad = _file(tmp_path, "b.txt", "v 1\nv 2\nv 3\n")
        assert run("check", "stable", f, bad)[0] == 1

    def test_coloring(self, run, tmp_path):
        f = _file(tmp_path, "p.hygr", PATH4)
        good = _file(tmp_path, "c.txt", "v 1 1\nv 2 2\nv 3 1\nv 4 2\n")
        code, out, _ = run("check", "coloring", f, good)
        assert code == 0 and "r=2" in out
        assert run("check", "coloring", f, good, "--r", "1")[0] == 1

    def test_htfree(self, run, tmp_path):
        k53 = _file(tmp_path, "k53.hygr", serialize_hypergraph(complete_uniform(5, 3)))
        assert run("check", "htfree", k53, "--t", "1")[0] == 0
        f = _file(tmp_path, "m1.hygr", "p hygr 3 1\ne 1 2 3\n")
        code, out, _ = run("check", "htfree", f, "--t", "0")
        assert code == 1 and "witness [1, 2, 3]" in out

    def test_matching(self, run, tmp_path):
        f = _file(tmp_path, "fano.hygr", FANO)
        code, out, _ = run("check", "matching", f)
        assert code == 0 and "greedy size 1" in out


class TestGadgetCommands:
    def test_ltimes(self, run, tmp_path):
        core = _file(tmp_path, "core.hygr", serialize_hypergraph(complete_graph(3)))
        h = _file(tmp_path, "h.hygr", "p hygr 3 1\ne 1 2 3\n")
        code, out, _ = run("gadget", "ltimes", core, h)
        assert code == 0
        g = parse_hypergraph(out)
        assert g.n == 6 and g.m == 6

    def test_uplifts(self, run, tmp_path):
        h = _file(tmp_path, "h.hygr", "p hygr 2 1\ne 1 2\n")
        code, out, _ = run("gadget", "uplift-bounded", h, "--r", "2")
        assert code == 0 and parse_hypergraph(out).n == 4
        code, out, _ = run("gadget", "uplift-uniform", h, "--r", "2", "--k", "2")
        assert code == 0 and parse_hypergraph(out).n == 5
        pre_out = tmp_path / "pins.pre"
        code, out, _ = run(
            "gadget", "uplift-precolor", h, "--r", "3", "--pre-out", str(pre_out)
        )
        assert code == 0 and parse_hypergraph(out).n == 5
        assert "k 1 1" in pre_out.read_text()

    def test_mwss_gadget(self, run, tmp_path):
        f = _file(tmp_path, "w.hygr", "p hygr 3 1\ne 1 2 3\nw 2 2/1\n")
        code, out, _ = run("gadget", "mwss", f)
        assert code == 0
        g = parse_hypergraph(out)
        assert g.n == 4 and g.weight(4) == 5  # 1 + 2 + 1 + 1


class TestGadgetAndVerifyFiles:
    def test_g1_files_verify(self, run, tmp_path):
        prefix = str(tmp_path / "g1")
        assert run("gadget", "g1", "--out-prefix", prefix)[0] == 0

        code, out, _ = run("verify", "certificate", prefix + ".hygr", prefix + ".cert")
        assert code == 0
        assert "CHECK witness PASS" in out

        code, out, _ = run("verify", "g1", prefix + ".hygr", prefix + ".cert")
        assert code == 0
        assert "CHECK template-clash PASS" in out
        assert "FAIL" not in out

    def test_tampered_g1_fails(self, run, tmp_path):
        prefix = str(tmp_path / "g1")
        assert run("gadget", "g1", "--out-prefix", prefix)[0] == 0
        hygr = tmp_path / "g1.hygr"
        body = hygr.read_text()
        assert "\ne 1 4 5\n" in body
        hygr.write_text(body.replace("\ne 1 4 5\n", "\ne 1 4 6\n", 1), encoding="utf-8")
        code, out, _ = run("verify", "g1", str(hygr), prefix + ".cert")
        assert code == 1
        assert "CHECK structure FAIL" in out

    def test_verify_fresh_build(self, run):
        code, out, _ = run("verify", "g2")
        assert code == 0 and "FAIL" not in out

    def test_verify_g1_requires_cert_with_input(self, run, tmp_path):
        f = _file(tmp_path, "fano.hygr", FANO)
        code, _, err = run("verify", "g1", f)
        assert code == 2 and "certificate file required" in err

    def test_reduction_files_verify(self, run, tmp_path):
        edge = _file(tmp_path, "edge.hygr", "p hygr 2 1\ne 1 2\n")
        prefix = str(tmp_path / "red")
        assert run("gadget", "reduce3col", edge, "--out-prefix", prefix)[0] == 0
        col = _file(tmp_path, "col.txt", "s COLORABLE\nv 1 1\nv 2 2\n")
        code, out, _ = run(
            "verify", "reduction", prefix + ".hygr", prefix + ".cert", edge,
            "--coloring", col,
        )
        assert code == 0, out
        assert "CHECK lift PASS" in out and "FAIL" not in out


class TestErrors:
    def test_missing_file(self, run):
        code, _, err = run("check", "linear", "/nonexistent/file.hygr")
        assert code == 2 and "error:" in err

    def test_parse_error_names_line(self, run, tmp_path):
        f = _file(tmp_path, "bad.hygr", "p hygr 2 1\ne 1 5\n")
        code, _, err = run("check", "linear", f)
        assert code == 2 and "line 2" in err

    def test_bad_usage_exits_two(self, run):
        with pytest.raises(SystemExit) as ei:
            main(["solve", "nonsense"])
        assert ei.value.code == 2

    def test_version(self, capsys):
        with pytest.raises(SystemExit) as ei:
            main(["--version"])
        assert ei.value.code == 0
        assert "hypercolor" in capsys.readouterr().out
