import pytest

from gjg.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestInvariants:
    def test_petersen(self, capsys):
        code, out, _ = run(capsys, "invariants", "--v", "5", "--k", "2", "--i", "0")
        assert code == 0
        assert "girth: 5" in out
        assert "odd_girth: 5" in out
        assert "diameter: 2" in out

    def test_matching(self, capsys):
        code, out, _ = run(capsys, "invariants", "--v", "6", "--k", "3", "--i", "0")
        assert code == 0
        assert "class: matching" in out
        assert "diameter: infinite" in out

    def test_empty_vertex_class(self, capsys):
        code, out, _ = run(capsys, "invariants", "--v", "3", "--k", "3", "--i", "1")
        assert code == 0
        assert "class: empty_vertex_set" in out

    def test_invalid_order_is_domain_error(self, capsys):
        code, _, err = run(capsys, "invariants", "--v", "2", "--k", "3", "--i", "0")
        assert code == 1
        assert "error" in err

    def test_structured_emit(self, capsys):
        code, out, _ = run(capsys, "invariants", "--v", "5", "--k", "2", "--i", "0",
                           "--emit", "structured")
        assert code == 0
        assert out.startswith("schema: gjg.report/1\n")

    def test_usage_error_exit_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["invariants", "--v", "5"])
        assert exc.value.code == 2


class TestDistance:
    def test_by_intersection(self, capsys):
        code, out, _ = run(capsys, "distance", "--v", "10", "--k", "4", "--i", "2",
                           "--x", "1")
        assert code == 0
        assert out.strip() == "2"

    def test_by_sets(self, capsys):
        code, out, _ = run(capsys, "distance", "--v", "8", "--k", "4", "--i", "1",
                           "--a", "0,1,2,3", "--b", "4,5,6,7")
        assert code == 0
        assert out.strip() == "3"

    def test_x_equals_k(self, capsys):
        code, out, _ = run(capsys, "distance", "--v", "10", "--k", "4", "--i", "2",
                           "--x", "4")
        assert code == 0
        assert out.strip() == "0"

    def test_with_witness(self, capsys):
        code, out, _ = run(capsys, "distance", "--v", "8", "--k", "4", "--i", "1",
                           "--a", "0,1,2,3", "--b", "4,5,6,7", "--witness")
        assert code == 0
        assert "geodesic of length 3" in out
        assert "verified: true" in out

    def test_out_of_range_exit_1(self, capsys):
        code, _, err = run(capsys, "distance", "--v", "10", "--k", "4", "--i", "2",
                           "--x", "9")
        assert code == 1
        assert "error" in err


class TestWitness:
    def test_odd_walk_odd_graph(self, capsys):
        code, out, _ = run(capsys, "witness", "--v", "7", "--k", "3", "--i", "0",
                           "oddwalk")
        assert code == 0
        assert "odd closed walk of length 7" in out
        assert "verified: true" in out

    def test_cycle_girth_four(self, capsys):
        code, out, _ = run(capsys, "witness", "--v", "8", "--k", "4", "--i", "1",
                           "cycle")
        assert code == 0
        assert "cycle of length 4" in out

    def test_cycle_triangle(self, capsys):
        code, out, _ = run(capsys, "witness", "--v", "6", "--k", "2", "--i", "0",
                           "cycle")
        assert code == 0
        assert "cycle of length 3" in out

    def test_non_normalized_triple_lifts(self, capsys):
        code, out, _ = run(capsys, "witness", "--v", "7", "--k", "4", "--i", "2",
                           "cycle")
        assert code == 0
        assert "cycle of length 3" in out
        assert "verified: true" in out

    def test_geodesic_via_x(self, capsys):
        code, out, _ = run(capsys, "witness", "--v", "10", "--k", "4", "--i", "2",
                           "geodesic", "--x", "1")
        assert code == 0
        assert "geodesic of length 2" in out

    def test_degenerate_exit_1(self, capsys):
        code, _, err = run(capsys, "witness", "--v", "6", "--k", "3", "--i", "0",
                           "cycle")
        assert code == 1
        assert "error" in err

    def test_deterministic_output(self, capsys):
        _, out1, _ = run(capsys, "witness", "--v", "9", "--k", "4", "--i", "1", "oddwalk")
        _, out2, _ = run(capsys, "witness", "--v", "9", "--k", "4", "--i", "1", "oddwalk")
        assert out1 == out2


class TestExport:
    def test_dimacs_header(self, capsys):
        code, out, _ = run(capsys, "export", "--v", "5", "--k", "2", "--i", "0",
                           "--format", "dimacs")
        assert code == 0
        assert out.startswith("p edge 10 15\n")

    def test_edgelist_to_file(self, capsys, tmp_path):
        target = tmp_path / "matching.txt"
        code, out, _ = run(capsys, "export", "--v", "6", "--k", "3", "--i", "0",
                           "--format", "edgelist", "--out", str(target))
        assert code == 0
        lines = target.read_text().splitlines()
        assert len(lines) == 10 and lines[0] == "0 19"

    def test_octahedron_line_count(self, capsys):
        code, out, _ = run(capsys, "export", "--v", "4", "--k", "2", "--i", "1",
                           "--format", "edgelist")
        assert code == 0
        assert len(out.splitlines()) == 12

    def test_budget_exit_1(self, capsys):
        code, _, err = run(capsys, "export", "--v", "16", "--k", "8", "--i", "4",
                           "--format", "edgelist", "--max-vertices", "10")
        assert code == 1
        assert "error" in err

    def test_env_budget_override(self, capsys, monkeypatch):
        monkeypatch.setenv("GJG_MAX_VERTICES", "3")
        code, _, err = run(capsys, "export", "--v", "5", "--k", "2", "--i", "0",
                           "--format", "edgelist")
        assert code == 1
        assert "budget" in err


class TestVerify:
    def test_small_sweep_passes(self, capsys):
        code, out, _ = run(capsys, "verify", "--v-max", "5")
        assert code == 0
        assert "PASS J(5,2,0)" in out
        assert " 0 failed" in out
        assert "FAIL" not in out

    def test_empty_sweep_exit_3(self, capsys):
        code, _, err = run(capsys, "verify", "--v-max", "5", "--max-vertices", "1")
        assert code == 3
        assert "nothing verified" in err

    def test_bad_config_exit_3(self, capsys):
        code, _, err = run(capsys, "verify", "--v-max", "100")
        assert code == 3
        assert "error" in err

    def test_deterministic_output(self, capsys):
        _, out1, _ = run(capsys, "verify", "--v-max", "4")
        _, out2, _ = run(capsys, "verify", "--v-max", "4")
        assert out1 == out2

    def test_parallel_matches_serial(self, capsys):
        _, serial, _ = run(capsys, "verify", "--v-max", "5")
        _, parallel, _ = run(capsys, "verify", "--v-max", "5", "--jobs", "2")
        assert serial == parallel
