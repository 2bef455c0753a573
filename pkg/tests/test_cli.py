import io
from pathlib import Path

import pytest

from cliquewidth.cli import main
from cliquewidth.fileformat import parse_graph, parse_weights, render_graph
from cliquewidth.errors import MalformedGraph
from cliquewidth.generators import GenSpec, manifest_line
from cliquewidth.graph import from_edge_list

from conftest import cycle_graph


def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


C5_FILE = "n 5\ne a b\ne b c\ne c d\ne d e\ne e a\n"
K3_FILE = "n 3\ne a b\ne b c\ne a c\n"


class TestGraphFile:
    def test_roundtrip(self):
        g = from_edge_list([("a", "b")], ["c"])
        assert parse_graph(render_graph(g)) == g

    def test_comments_and_blanks(self):
        g = parse_graph("# hello\n\nn 2\ne a b\n")
        assert g.n == 2

    def test_header_mismatch(self):
        with pytest.raises(MalformedGraph):
            parse_graph("n 3\ne a b\n")

    def test_bad_id(self):
        with pytest.raises(MalformedGraph):
            parse_graph("n 2\ne a b-c\n")

    def test_missing_header(self):
        with pytest.raises(MalformedGraph):
            parse_graph("e a b\n")

    def test_weights_default_one(self):
        g = parse_graph(C5_FILE)
        weights = parse_weights("w a 5\n", g)
        assert weights["a"] == 5
        assert weights["b"] == 1

    def test_weights_unknown_vertex(self):
        g = parse_graph(C5_FILE)
        with pytest.raises(MalformedGraph):
            parse_weights("w zz 1\n", g)


class TestCommands:
    def test_check_member(self, tmp_path, capsys):
        path = write(tmp_path, "c5.graph", C5_FILE)
        assert main(["check", path]) == 0
        out = capsys.readouterr().out
        assert "triangle-free: yes" in out

    def test_check_triangle(self, tmp_path, capsys):
        path = write(tmp_path, "k3.graph", K3_FILE)
        assert main(["check", path]) == 2
        assert "spider-free" in capsys.readouterr().out

    def test_decompose_writes_expression(self, tmp_path, capsys):
        path = write(tmp_path, "c5.graph", C5_FILE)
        out = str(tmp_path / "expr.txt")
        assert main(["decompose", path, "--out", out, "--verified"]) == 0
        err = capsys.readouterr().err
        assert "case C5-case" in err and "verified yes" in err
        text = (tmp_path / "expr.txt").read_text().strip()
        assert text.startswith(("v(", "u(", "j(", "r("))

    def test_decompose_not_in_class(self, tmp_path, capsys):
        path = write(tmp_path, "k3.graph", K3_FILE)
        assert main(["decompose", path]) == 2
        assert "witness" in capsys.readouterr().err

    def test_decompose_unsupported(self, tmp_path, capsys):
        g = cycle_graph(10)
        path = write(tmp_path, "c10.graph", render_graph(g))
        assert main(["decompose", path]) == 3

    def test_verify_roundtrip(self, tmp_path, capsys):
        graph_path = write(tmp_path, "c5.graph", C5_FILE)
        expr_path = str(tmp_path / "expr.txt")
        main(["decompose", graph_path, "--out", expr_path])
        capsys.readouterr()
        assert main(["verify", graph_path, expr_path]) == 0
        assert "verified" in capsys.readouterr().out

    def test_verify_mismatch(self, tmp_path, capsys):
        graph_path = write(tmp_path, "c5.graph", C5_FILE)
        expr_path = write(tmp_path, "expr.txt", "v(1,a)")
        assert main(["verify", graph_path, expr_path]) == 4

    def test_width(self, tmp_path, capsys):
        expr_path = write(tmp_path, "expr.txt", "j(1,2,u(v(1,a),v(2,b)))")
        assert main(["width", expr_path]) == 0
        assert capsys.readouterr().out.strip() == "2"

    def test_mwis_both_routes_agree(self, tmp_path, capsys):
        graph_path = write(tmp_path, "c5.graph", C5_FILE)
        weights_path = write(tmp_path, "w.txt", "w a 3\nw c 4\n")
        assert main(["mwis", graph_path, weights_path, "--via", "expr"]) == 0
        via_expr = capsys.readouterr().out.splitlines()
        assert main(["mwis", graph_path, weights_path, "--via", "brute"]) == 0
        via_brute = capsys.readouterr().out.splitlines()
        assert via_expr[0] == via_brute[0] == "7"

    def test_oracle_cwle(self, tmp_path, capsys):
        graph_path = write(tmp_path, "e.graph", "n 2\nv a\nv b\n")
        cert = str(tmp_path / "cert.txt")
        assert main(["oracle", "cwle", graph_path, "1", "--cert", cert]) == 0
        assert capsys.readouterr().out.strip() == "yes"
        assert (tmp_path / "cert.txt").read_text().strip()

    def test_gen_param_forms(self, tmp_path):
        # comma-joined and space-separated parameter forms agree
        a = str(tmp_path / "a.graph")
        b = str(tmp_path / "b.graph")
        assert main(["gen", "c5", "1,1,0,2,1", "2,1,2,1,2", "--seed", "3", "--out", a]) == 0
        assert main(
            ["gen", "c5", "1", "1", "0", "2", "1", "2", "1", "2", "1", "2", "--seed", "3", "--out", b]
        ) == 0
        assert Path(a).read_text() == Path(b).read_text()

    def test_gen_pipe_decompose(self, tmp_path, capsys):
        out = str(tmp_path / "c7.graph")
        assert main(["gen", "cycle", "7", "--out", out]) == 0
        assert main(["decompose", out, "--verified"]) == 0
        err = capsys.readouterr().err
        assert "long-odd-cycle" in err

    def test_stdin_dash(self, tmp_path, capsys, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.StringIO(C5_FILE))
        assert main(["check", "-"]) == 0

    def test_malformed_exit_64(self, tmp_path, capsys):
        path = write(tmp_path, "bad.graph", "nonsense\n")
        assert main(["check", path]) == 64

    def test_bench(self, tmp_path, capsys):
        lines = [
            manifest_line(GenSpec("cycle", (7,), 0)),
            manifest_line(GenSpec("c5", (0, 0, 0, 0, 0, 1, 0, 0, 0, 0), 0)),
            manifest_line(GenSpec("chain", (3, 3), 7)),
        ]
        manifest = write(tmp_path, "corpus.manifest", "\n".join(lines) + "\n")
        assert main(["bench", manifest]) == 0
        out = capsys.readouterr().out
        assert out.strip().splitlines()[-1].startswith("MAXWIDTH ")
        assert "long-odd-cycle" in out

    def test_bench_hash_mismatch(self, tmp_path, capsys):
        line = manifest_line(GenSpec("cycle", (7,), 0))
        parts = line.split()
        parts[-1] = "0" * 64
        manifest = write(tmp_path, "corpus.manifest", " ".join(parts) + "\n")
        assert main(["bench", manifest]) == 4
        assert "HASH-MISMATCH" in capsys.readouterr().out

    def test_bench_committed_corpus_slice(self, tmp_path, capsys):
        # first entries of the committed small corpus regenerate,
        # match their hashes, and stay within the width budget
        from pathlib import Path
        from cliquewidth.c5 import MAX_WIDTH

        source = Path(__file__).resolve().parents[1] / "data" / "corpus_small.manifest"
        lines = [
            line
            for line in source.read_text().splitlines()
            if line and not line.startswith("#")
        ][:10]
        manifest = write(tmp_path, "slice.manifest", "\n".join(lines) + "\n")
        assert main(["bench", manifest]) == 0
        out = capsys.readouterr().out
        final = out.strip().splitlines()[-1]
        assert final.startswith("MAXWIDTH ")
        assert int(final.split()[1]) <= MAX_WIDTH
