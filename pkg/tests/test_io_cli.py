from __future__ import annotations

import io
import itertools
import json
import re
import subprocess
import sys
from collections import Counter

import pytest
from hypothesis import given, settings
from scipy.stats import chisquare

from tree_hausdorff.cli import loglog_slope, run_cli
from tree_hausdorff.engine import hausdorff_distance, verify_mapping
from tree_hausdorff.generate import gen_random_tree, prufer_decode
from tree_hausdorff.io import ParseError, ResultDocument, parse_edge_list, serialize_edge_list
from tree_hausdorff.tree import build_tree

from conftest import FIXTURES, trees


def cli(*args: str) -> tuple[int, str, str]:
    out, err = io.StringIO(), io.StringIO()
    code = run_cli([str(a) for a in args], out=out, err=err)
    return code, out.getvalue(), err.getvalue()


class TestParse:
    def test_single_vertex(self):
        assert parse_edge_list("1\n") == build_tree(1, [])

    def test_fig5_t2(self):
        t = parse_edge_list("8\n0 3\n1 3\n2 3\n3 7\n4 5\n5 6\n6 7\n")
        assert t.n == 8 and t.adjacency[3] == (0, 1, 2, 7)

    def test_comments_skipped(self):
        assert parse_edge_list("# hi\n2\n# mid\n0 1\n").n == 2

    def test_too_few_edges(self):
        with pytest.raises(ParseError, match="expected 2 edges, found 1"):
            parse_edge_list("3\n0 1\n")

    @pytest.mark.parametrize(
        "text, line, column",
        [
            ("x\n", 1, 1),
            ("3\n0 1\n1 b\n", 3, 3),
            ("3\n0 1\n1 2 2\n", 3, 1),
            ("3\n0 1\n1 7\n", 3, 3),
            ("2 2\n0 1\n", 1, 1),
        ],
    )
    def test_diagnostics(self, text, line, column):
        with pytest.raises(ParseError) as info:
            parse_edge_list(text)
        assert (info.value.line, info.value.column) == (line, column)

    def test_disconnected(self):
        with pytest.raises(ParseError, match="DisconnectedError"):
            parse_edge_list("4\n0 1\n1 2\n2 0\n")

    def test_missing_header(self):
        with pytest.raises(ParseError):
            parse_edge_list("# only a comment\n")

    @settings(max_examples=200, deadline=None)
    @given(trees(max_n=40))
    def test_round_trip(self, t):
        assert parse_edge_list(serialize_edge_list(t, ["c"])) == t

    def test_every_fixture_parses(self):
        names = sorted(p.name for p in FIXTURES.glob("*.txt"))
        assert names
        for name in names:
            text = (FIXTURES / name).read_text()
            assert "\r" not in text
            parse_edge_list(text)


class TestGenerate:
    def test_n1(self):
        assert gen_random_tree(1, 123).n == 1

    def test_n2(self):
        assert gen_random_tree(2, 99).edges == ((0, 1),)

    def test_deterministic(self):
        assert gen_random_tree(8, 42) == gen_random_tree(8, 42)

    def test_n0_rejected(self):
        with pytest.raises(ValueError):
            gen_random_tree(0, 1)

    def test_prufer_bijection_n5(self):
        # Cayley: 5^3 codes give 125 distinct labeled trees
        decoded = {frozenset(prufer_decode(seq, 5)) for seq in itertools.product(range(5), repeat=3)}
        assert len(decoded) == 125

    def test_uniform_at_n4(self):
        counts = Counter(gen_random_tree(4, seed).edges for seed in range(10_000))
        assert len(counts) == 16
        assert chisquare(list(counts.values())).pvalue > 0.001


class TestResultDocument:
    def test_round_trip(self, fig5):
        r = hausdorff_distance(*fig5)
        doc = ResultDocument.from_result(r, 1)
        text = doc.to_json()
        assert ResultDocument.from_json(text) == doc
        assert list(json.loads(text)) == ["distance", "root1", "root2", "swapped", "mapping", "cover_distance"]
        assert doc.to_result() == r

    def test_malformed(self):
        with pytest.raises(ParseError):
            ResultDocument.from_json('{"distance": 1}')


class TestCli:
    def test_compute_fig5(self):
        code, out, _ = cli("compute", FIXTURES / "fig5_t1.txt", FIXTURES / "fig5_t2.txt")
        assert (code, out) == (0, "1\n")

    def test_compute_fig1(self):
        code, out, _ = cli("compute", FIXTURES / "fig1_g.txt", FIXTURES / "fig1_g1.txt")
        assert (code, out) == (0, "2\n")

    def test_compute_then_verify(self, tmp_path):
        a, b = FIXTURES / "fig1_g.txt", FIXTURES / "fig1_g2.txt"
        result = tmp_path / "r.json"
        assert cli("compute", a, b, "--out", result)[0] == 0
        code, out, _ = cli("verify", a, b, result)
        assert code == 0 and "valid: true" in out

    def test_verify_rejects_tampered_document(self, tmp_path):
        a, b = FIXTURES / "fig5_t1.txt", FIXTURES / "fig5_t2.txt"
        result = tmp_path / "r.json"
        cli("compute", a, b, "--out", result)
        data = json.loads(result.read_text())
        data["mapping"] = [p for p in data["mapping"] if p != [8, 6]]
        result.write_text(json.dumps(data))
        assert cli("verify", a, b, result)[0] == 2

    def test_verify_rejects_wrong_distance(self, tmp_path):
        a, b = FIXTURES / "fig5_t1.txt", FIXTURES / "fig5_t2.txt"
        result = tmp_path / "r.json"
        cli("compute", a, b, "--out", result)
        data = json.loads(result.read_text())
        data["distance"] = 0
        result.write_text(json.dumps(data))
        assert cli("verify", a, b, result)[0] == 2

    def test_oracle_random_pair(self, tmp_path):
        a, b = tmp_path / "a.txt", tmp_path / "b.txt"
        cli("gen", "--n", 7, "--seed", 11, "--out", a)
        cli("gen", "--n", 7, "--seed", 12, "--out", b)
        code, out, _ = cli("oracle", a, b)
        lines = out.splitlines()
        assert code == 0
        assert lines[0].split(": ")[1] == lines[1].split(": ")[1]

    def test_oracle_cap(self):
        code, _, err = cli("oracle", FIXTURES / "fig5_t1.txt", FIXTURES / "fig5_t2.txt")
        assert code == 3 and "cap" in err

    def test_oracle_with_raised_cap(self):
        code, out, _ = cli(
            "oracle", FIXTURES / "fig5_t1.txt", FIXTURES / "fig5_t2.txt", "--max-vertices", 11
        )
        assert code == 0 and out == "oracle: 1\nengine: 1\n"

    def test_gen_writes_parseable_file(self, tmp_path):
        out = tmp_path / "t.txt"
        assert cli("gen", "--n", 12, "--seed", 5, "--out", out)[0] == 0
        assert parse_edge_list(out.read_text()) == gen_random_tree(12, 5)

    def test_bench(self):
        code, out, _ = cli("bench", "--sizes", "5,10,20", "--seed", 3, "--reps", 2, "--threads", 1)
        assert code == 0
        rows = [line.split() for line in out.splitlines()[1:] if not line.startswith("log")]
        assert [int(r[0]) for r in rows] == [5, 5, 10, 10, 20, 20]
        assert re.search(r"log-log slope: -?\d+\.\d+", out)

    @pytest.mark.parametrize(
        "args",
        [
            [],
            ["nonsense"],
            ["compute", "missing_a.txt", "missing_b.txt"],
            ["bench", "--sizes", "a,b"],
            ["compute", "x", "y", "--threads", "0"],
            ["gen", "--n", "0", "--seed", "1", "--out", "unused.txt"],
        ],
    )
    def test_usage_errors_exit_1(self, args):
        code, _, err = cli(*args)
        assert code == 1 and err.startswith("error:")

    def test_parse_error_exit_1(self, tmp_path):
        bad = tmp_path / "bad.txt"
        bad.write_text("3\n0 1\n")
        code, _, err = cli("compute", bad, FIXTURES / "fig1_g.txt")
        assert code == 1 and "expected 2 edges, found 1" in err

    def test_module_entry_point(self):
        proc = subprocess.run(
            [sys.executable, "-m", "tree_hausdorff", "compute",
             str(FIXTURES / "fig1_g.txt"), str(FIXTURES / "fig1_g2.txt")],
            capture_output=True, text=True, check=False,
        )
        assert proc.returncode == 0 and proc.stdout == "1\n"


def test_loglog_slope_of_a_power_law():
    sizes = [10, 20, 40, 80]
    assert loglog_slope(sizes, [s**3 * 1e-6 for s in sizes]) == pytest.approx(3.0)


@settings(max_examples=60, deadline=None)
@given(trees(max_n=20), trees(max_n=20))
def test_compute_verify_round_trip(tmp_path_factory, a, b):
    tmp = tmp_path_factory.mktemp("rt")
    fa, fb, fr = tmp / "a.txt", tmp / "b.txt", tmp / "r.json"
    fa.write_text(serialize_edge_list(a))
    fb.write_text(serialize_edge_list(b))
    assert cli("compute", fa, fb, "--out", fr)[0] == 0
    assert cli("verify", fa, fb, fr)[0] == 0
    doc = ResultDocument.from_json(fr.read_text())
    assert doc.cover_distance == verify_mapping(a, b, doc.to_result()).cover_distance
