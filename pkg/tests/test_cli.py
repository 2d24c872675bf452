import json

import pytest

from kbalance.cli import main

C4_L = "6*L[1,1,1,1] + 2*L[2,1,1] + 4*L[1,2,1] + 2*L[1,1,2] + 2*L[2,2]"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestCompute:
    def test_c4_k2_fundamental(self, capsys):
        code, out, _ = run(capsys, "compute", "cycle:4", "--k", "2", "--basis", "L")
        assert code == 0
        assert out.strip() == C4_L

    def test_both_paths_same_output(self, capsys):
        outs = []
        for path in ("orientations", "colorings"):
            code, out, _ = run(capsys, "compute", "cycle:5", "--k", "2", "--basis", "M",
                               "--path", path)
            assert code == 0
            outs.append(out)
        assert outs[0] == outs[1]

    def test_deterministic(self, capsys):
        a = run(capsys, "compute", "complete_bipartite:2,3", "--k", "2", "--basis", "M")
        b = run(capsys, "compute", "complete_bipartite:2,3", "--k", "2", "--basis", "M")
        assert a == b

    def test_json_format(self, capsys):
        code, out, _ = run(capsys, "compute", "cycle:4", "--k", "2", "--basis", "L",
                           "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert doc["degree"] == 4 and doc["basis"] == "L"
        assert doc["terms"][0] == [[1, 1, 1, 1], 6, 1]

    def test_zero_result(self, capsys):
        code, out, _ = run(capsys, "compute", "cycle:3", "--k", "2")
        assert code == 0
        assert out.strip() == "0"

    def test_graph6_source(self, capsys):
        code, out, _ = run(capsys, "compute", "--graph6", "Cl", "--k", "2", "--basis", "L")
        assert code == 0
        assert out.strip() == C4_L

    def test_edge_list_source(self, capsys, tmp_path):
        f = tmp_path / "c4.txt"
        f.write_text("4 4\n1 2\n2 3\n3 4\n1 4\n")
        code, out, _ = run(capsys, "compute", "--edge-list", str(f), "--k", "2", "--basis", "L")
        assert code == 0
        assert out.strip() == C4_L


class TestPolynomial:
    def test_c4_text(self, capsys):
        code, out, _ = run(capsys, "polynomial", "cycle:4", "--k", "2",
                           "--eval", "3", "--eval", "-1")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "-x + 7/3*x^2 - 2*x^3 + 2/3*x^4"
        assert lines[1] == "chi(3) = 18"
        assert lines[2] == "chi(-1) = 6"

    def test_json(self, capsys):
        code, out, _ = run(capsys, "polynomial", "cycle:4", "--k", "2", "--eval", "4",
                           "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert doc["polynomial"] == [[0, 0, 1], [1, -1, 1], [2, 7, 3], [3, -2, 1], [4, 2, 3]]
        assert doc["evaluations"] == [[4, 76, 1]]


class TestOrientations:
    def test_count(self, capsys):
        code, out, _ = run(capsys, "orientations", "cycle:4", "--k", "2")
        assert code == 0
        assert out.strip() == "6"

    def test_list(self, capsys):
        code, out, _ = run(capsys, "orientations", "cycle:4", "--k", "2", "--list")
        assert code == 0
        lines = out.strip().splitlines()
        assert len(lines) == 6
        assert all("->" in ln for ln in lines)
        assert lines == sorted(set(lines), key=lines.index)  # no duplicates

    def test_grotzsch_zero(self, capsys):
        code, out, _ = run(capsys, "orientations", "grotzsch", "--k", "2")
        assert code == 0
        assert out.strip() == "0"


class TestVerify:
    def test_single_suite_passes(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "cycle-formula", "--max-n", "5")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines and all(ln.startswith("PASS ") for ln in lines)

    def test_oracle_small(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "oracle", "--max-n", "4",
                           "--random-n6", "2")
        assert code == 0
        assert all(ln.startswith("PASS ") for ln in out.strip().splitlines())

    def test_reciprocity_small(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "reciprocity", "--max-n", "3")
        assert code == 0
        assert all(ln.startswith("PASS ") for ln in out.strip().splitlines())


class TestErrors:
    def test_no_graph_source(self, capsys):
        code, _, err = run(capsys, "compute", "--k", "2")
        assert code == 2
        assert err.startswith("error:")

    def test_two_graph_sources(self, capsys):
        code, _, err = run(capsys, "compute", "cycle:4", "--graph6", "Cl")
        assert code == 2
        assert err.startswith("error:")

    def test_bad_generator(self, capsys):
        code, _, err = run(capsys, "compute", "dodecahedron")
        assert code == 2
        assert err.startswith("error:")

    def test_bad_graph6(self, capsys):
        code, _, err = run(capsys, "compute", "--graph6", "~~~")
        assert code == 2
        assert err.startswith("error:")

    def test_missing_edge_list_file(self, capsys, tmp_path):
        code, _, err = run(capsys, "compute", "--edge-list", str(tmp_path / "nope.txt"))
        assert code == 2
        assert err.startswith("error:")

    def test_bad_k(self, capsys):
        code, _, err = run(capsys, "compute", "cycle:4", "--k", "0")
        assert code == 2
        assert err.startswith("error:")

    def test_cycle_cap(self, capsys):
        code, _, err = run(capsys, "orientations", "petersen", "--k", "2",
                           "--max-cycles", "10")
        assert code == 2
        assert "cycle" in err

    def test_node_budget(self, capsys):
        code, _, err = run(capsys, "orientations", "petersen", "--k", "1",
                           "--node-budget", "100")
        assert code == 2
        assert err.startswith("error:")

    def test_unknown_subcommand_exits(self, capsys):
        with pytest.raises(SystemExit):
            main(["frobnicate"])
