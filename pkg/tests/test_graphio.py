import math
from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gjg.errors import InvalidSet, OutOfRange
from gjg.formulas import report_for
from gjg.graphio import export_graph, export_report, rank, unrank
from gjg.oracle import build_graph, oracle_report
from gjg.params import make_parameters

P = make_parameters


class TestRankUnrank:
    def test_first_and_last(self):
        p = P(7, 3, 0)
        assert rank(p, (0, 1, 2)) == 0
        assert rank(p, (4, 5, 6)) == math.comb(7, 3) - 1
        assert unrank(p, 0) == (0, 1, 2)
        assert unrank(p, math.comb(7, 3) - 1) == (4, 5, 6)

    def test_worked_example(self):
        # Enumerating 2-subsets of a 5-set in colex order puts {1,3} fifth.
        p = P(5, 2, 0)
        assert rank(p, (1, 3)) == 4
        assert unrank(p, 4) == (1, 3)

    def test_exhaustive_bijection_small(self):
        for v, k in [(5, 2), (6, 3), (7, 3), (8, 4), (6, 1), (5, 5)]:
            p = P(v, k, 0 if k > 0 else 0)
            seen = set()
            for r in range(math.comb(v, k)):
                s = unrank(p, r)
                assert rank(p, s) == r
                seen.add(s)
            assert seen == set(combinations(range(v), k))

    def test_colex_order_is_reversed_tuple_order(self):
        p = P(6, 3, 0)
        subs = [unrank(p, r) for r in range(math.comb(6, 3))]
        assert subs == sorted(subs, key=lambda t: t[::-1])

    def test_invalid_sets(self):
        p = P(6, 3, 0)
        for bad in [(0, 1), (0, 1, 1), (1, 0, 2), (0, 1, 6), (-1, 0, 1)]:
            with pytest.raises(InvalidSet):
                rank(p, bad)

    def test_rank_out_of_range(self):
        p = P(6, 3, 0)
        with pytest.raises(OutOfRange):
            unrank(p, -1)
        with pytest.raises(OutOfRange):
            unrank(p, math.comb(6, 3))

    @given(st.integers(1, 16).flatmap(
        lambda v: st.tuples(st.just(v), st.integers(0, v))
    ), st.randoms())
    def test_round_trip_random(self, vk, rnd):
        v, k = vk
        p = P(v, k, max(0, k - 1))
        r = rnd.randrange(math.comb(v, k))
        assert rank(p, unrank(p, r)) == r


class TestExportGraph:
    def test_matching_edgelist_golden(self):
        g = build_graph(P(6, 3, 0))
        lines = export_graph(g, "edgelist").decode().splitlines()
        assert len(lines) == 10
        assert lines[0] == "0 19"
        # colex complement pairing: rank r is matched with 19 - r
        assert lines == [f"{r} {19 - r}" for r in range(10)]

    def test_petersen_dimacs_golden(self):
        g = build_graph(P(5, 2, 0))
        payload = export_graph(g, "dimacs").decode()
        lines = payload.splitlines()
        assert lines[0] == "p edge 10 15"
        assert len(lines) == 16
        assert all(line.startswith("e ") for line in lines[1:])
        assert payload.endswith("\n")

    def test_octahedron_edge_count(self):
        g = build_graph(P(4, 2, 1))
        lines = export_graph(g, "edgelist").decode().splitlines()
        assert len(lines) == 12

    def test_empty_graph(self):
        g = build_graph(P(4, 2, 2))
        assert export_graph(g, "edgelist") == b""
        assert export_graph(g, "dimacs") == b"p edge 6 0\n"

    def test_byte_identical(self):
        g = build_graph(P(5, 2, 0))
        assert export_graph(g, "edgelist") == export_graph(g, "edgelist")

    def test_edge_count_matches_regularity(self):
        for t in [(5, 2, 0), (8, 4, 1), (7, 3, 1)]:
            g = build_graph(P(*t))
            lines = export_graph(g, "edgelist").decode().splitlines()
            assert len(lines) == g.n * g.degree // 2

    def test_unknown_format(self):
        g = build_graph(P(5, 2, 0))
        with pytest.raises(ValueError):
            export_graph(g, "graphml")


class TestExportReport:
    def test_formula_report_golden(self):
        got = export_report(report_for(5, 2, 0)).decode()
        assert got == (
            "schema: gjg.report/1\n"
            "v: 5\nk: 2\ni: 0\ndelta: 1\nclass: odd_graph\n"
            "girth: 5\nodd_girth: 5\ndiameter: 2\n"
            "distance_profile:\n  0: 1\n  1: 2\n  2: 0\n"
        )

    def test_matching_report_spells_literals(self):
        got = export_report(report_for(6, 3, 0)).decode()
        assert "girth: undefined" in got
        assert "odd_girth: undefined" in got
        assert "diameter: infinite" in got
        assert "  1: infinite" in got

    def test_oracle_report_has_connected(self):
        got = export_report(oracle_report(P(5, 2, 0))).decode()
        assert got.endswith("connected: true\n")
        got = export_report(oracle_report(P(6, 3, 0))).decode()
        assert got.endswith("connected: false\n")

    def test_profile_snapshot(self):
        got = export_report(report_for(8, 4, 1)).decode()
        assert "distance_profile:\n  0: 3\n  1: 1\n  2: 2\n  3: 2\n  4: 0\n" in got

    def test_key_order(self):
        keys = [
            line.split(":")[0]
            for line in export_report(oracle_report(P(5, 2, 0))).decode().splitlines()
            if line and not line.startswith(" ")
        ]
        assert keys == [
            "schema", "v", "k", "i", "delta", "class",
            "girth", "odd_girth", "diameter", "distance_profile", "connected",
        ]
