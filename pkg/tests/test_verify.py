import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graphs
from treepack.extremal import CrossPattern, book_graph, complete_graph, enumerate_family, family_graph
from treepack.graph import Graph, build_graph, edge_connectivity, min_degree
from treepack.iso import are_isomorphic, isomorphism
from treepack.spectral import spectral_radius
from treepack.verify import (CSV_COLUMNS, InapplicableError, Mode, SweepConfig, Verdict,
                             VerificationRecord, _gap_verdict, check_bracket_lemmas,
                             check_connectivity_instance, check_edge_theorem,
                             check_family_extremality, check_spectral_theorem, exit_code,
                             random_min_degree_graph, run_sweep, sample_connectivity_class,
                             search_minimal_packing, spectral_threshold)


def relabel(g: Graph, perm) -> Graph:
    return build_graph(g.n, [(perm[u], perm[v]) for u, v in g.edges])


class TestIsomorphism:
    @settings(max_examples=60, deadline=None)
    @given(graphs(1, 12), st.randoms(use_true_random=False))
    def test_relabeled_copies(self, g, rnd):
        perm = list(range(g.n))
        rnd.shuffle(perm)
        h = relabel(g, perm)
        mapping = isomorphism(g, h)
        assert mapping is not None
        assert all(h.has_edge(mapping[u], mapping[v]) for u, v in g.edges)

    def test_cospectral_pair(self):
        star = build_graph(5, [(0, 1), (0, 2), (0, 3), (0, 4)])
        square = build_graph(5, [(0, 1), (1, 2), (2, 3), (0, 3)])
        assert not are_isomorphic(star, square)

    def test_same_degrees_different_graphs(self):
        two_triangles = build_graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
        hexagon = build_graph(6, [(i, (i + 1) % 6) for i in range(6)])
        assert not are_isomorphic(two_triangles, hexagon)

    def test_family_members(self):
        members = [fg.graph for fg in enumerate_family(13, 5, 2)]
        book = book_graph(13, 4, 2)
        assert [are_isomorphic(m, book) for m in members].count(True) == 1


class TestEdgeTheorem:
    def test_tightness_member(self):
        g = family_graph(12, 5, CrossPattern(5, 7, ((0, 0),))).graph
        rec = check_edge_theorem(g, 2)
        assert (rec.premise, rec.conclusion, rec.verdict) == (False, False, Verdict.CONSISTENT)
        assert rec.margin == -1 and "partition" in rec.witness

    def test_threshold_member(self):
        g = family_graph(12, 5, CrossPattern(5, 7, ((0, 0), (1, 1)))).graph
        rec = check_edge_theorem(g, 2)
        assert (rec.premise, rec.conclusion, rec.verdict) == (True, True, Verdict.CONSISTENT)

    def test_k4(self):
        rec = check_edge_theorem(complete_graph(4), 2)
        assert (rec.premise, rec.conclusion, rec.verdict) == (False, True, Verdict.CONSISTENT)

    @settings(max_examples=100, deadline=None)
    @given(graphs(2, 10, connected=True), st.integers(1, 3))
    def test_failed_premise_is_consistent(self, g, k):
        rec = check_edge_theorem(g, k)
        if not rec.premise:
            assert rec.verdict is Verdict.CONSISTENT


class TestSpectralTheorem:
    def test_threshold_gate(self):
        with pytest.raises(InapplicableError):
            spectral_threshold(12, 5, 2)
        with pytest.raises(InapplicableError):
            spectral_threshold(13, 4, 1)

    def test_book_equality(self):
        rec = check_spectral_theorem(book_graph(13, 4, 1), 2)
        assert rec.premise and rec.conclusion and rec.verdict is Verdict.CONSISTENT
        assert "isomorphic" in rec.witness

    def test_relabeled_book_equality(self):
        perm = list(reversed(range(13)))
        rec = check_spectral_theorem(relabel(book_graph(13, 4, 1), perm), 2)
        assert rec.verdict is Verdict.CONSISTENT and "isomorphic" in rec.witness

    def test_complete_gate(self):
        rec = check_spectral_theorem(complete_graph(13), 2)
        assert not rec.premise and rec.verdict is Verdict.CONSISTENT

    def test_random_below_threshold(self):
        rng = np.random.default_rng(13)
        seen = 0
        for _ in range(200):
            g = random_min_degree_graph(13, 4, rng)
            if min_degree(g) != 4 or spectral_radius(g) >= spectral_threshold(13, 4, 2) - 1e-8:
                continue
            rec = check_spectral_theorem(g, 2)
            assert not rec.premise and rec.verdict is Verdict.CONSISTENT
            seen += 1
        assert seen > 0


class TestBrackets:
    def test_lemma_two_three(self):
        rec = check_bracket_lemmas(13, 4, 1, "L2.3")
        assert rec.verdict is Verdict.CONSISTENT and rec.margin > 1e-8

    def test_lemma_three_two(self):
        rec = check_bracket_lemmas(14, 5, 4, "L3.2")
        assert rec.verdict is Verdict.CONSISTENT and rec.margin > 1e-8
        assert rec.witness == "bracket (7, 9)"

    def test_gate(self):
        with pytest.raises(InapplicableError):
            check_bracket_lemmas(10, 4, 1, "L2.3")
        # n = 12 clears n >= 2*delta + 3 = 11
        assert check_bracket_lemmas(12, 4, 1, "L2.3").verdict is Verdict.CONSISTENT
        with pytest.raises(InapplicableError):
            check_bracket_lemmas(14, 5, 5, "L3.2")


class TestExtremality:
    def test_one_link(self):
        for sid in ("L2.5", "L2.6"):
            rec = check_family_extremality(13, 4, 1, sid)
            assert rec.verdict is Verdict.CONSISTENT and rec.margin > 1e-8

    def test_two_links(self):
        rec = check_family_extremality(13, 4, 2)
        assert rec.verdict is Verdict.CONSISTENT and rec.margin > 1e-8
        assert rec.witness == "runner-up"

    def test_connectivity_family(self):
        rec = check_family_extremality(14, 4, 4, "L3.3")
        assert rec.margin > 1e-8 and rec.verdict is Verdict.CONSISTENT

    def test_no_rival(self):
        rec = check_family_extremality(11, 4, 1, "L2.5")
        assert rec.margin == float("inf") and rec.witness == "no rival"


class TestConnectivityClass:
    def test_samples(self):
        recs = list(sample_connectivity_class(14, 5, 4, 60, 7))
        assert len(recs) == 60
        assert all(r.verdict is Verdict.CONSISTENT for r in recs)
        for r in recs[:10]:
            assert (r.n, r.delta, r.k_or_kappa) == (14, 5, 4)

    def test_members_really_in_class(self):
        from treepack.graph import parse_graph6
        for r in sample_connectivity_class(16, 6, 4, 10, 3):
            g = parse_graph6(r.graph6)
            assert min_degree(g) == 6 and edge_connectivity(g)[0] == 4

    def test_injected_book(self):
        rec = check_connectivity_instance(book_graph(14, 5, 4))
        assert rec.verdict is Verdict.CONSISTENT and rec.witness.startswith("equality")

    def test_infeasible(self):
        with pytest.raises(InapplicableError):
            next(sample_connectivity_class(14, 5, 5, 1, 0))

    def test_budget_exhaustion(self, caplog):
        recs = list(sample_connectivity_class(14, 5, 4, 50, 1, budget=3))
        assert len(recs) < 50
        assert "budget" in caplog.text


class TestHunt:
    def test_k4_only(self):
        rep = search_minimal_packing(5, 2, 10**6, 0)
        assert rep.status == "EXHAUSTIVE"
        assert rep.candidate_unbeaten

    def test_four_vertices_rejected(self):
        with pytest.raises(InapplicableError):
            search_minimal_packing(4, 2, 100, 0)

    def test_exhaustive_six(self):
        rep = search_minimal_packing(6, 2, 10**4, 0)
        assert rep.status == "EXHAUSTIVE" and rep.evaluated == 3003
        assert rep.candidate_isomorphic
        recs = rep.records()
        assert [r.statement_id for r in recs] == ["P5.2", "P5.3"]
        assert recs[0].verdict is Verdict.CONSISTENT and recs[1].k_or_kappa == 2

    def test_partial_eight(self):
        rep = search_minimal_packing(8, 2, 1500, 1)
        assert rep.status == "PARTIAL"
        assert rep.candidate_unbeaten
        again = search_minimal_packing(8, 2, 1500, 1)
        assert again == rep

    def test_jobs_do_not_change_result(self):
        assert search_minimal_packing(8, 2, 1200, 4, jobs=3) == search_minimal_packing(8, 2, 1200, 4)


class TestSweeps:
    def test_deterministic_bytes(self):
        cfg = SweepConfig("T1.2", (13,), (4,), (2,), Mode.RANDOM_SAMPLE, 30, 5)
        assert run_sweep(cfg)[0] == run_sweep(cfg)[0]

    def test_family_sweep(self):
        text, recs = run_sweep(SweepConfig("T1.2", (11, 12, 13), (4,), (2,)))
        lines = text.splitlines()
        assert lines[0] == ",".join(CSV_COLUMNS)
        assert lines[-1].startswith("SUMMARY") and "COUNTEREXAMPLE=0" in lines[-1]
        assert len(lines) == len(recs) + 2
        assert exit_code(recs) == 0

    def test_bracket_sweep(self):
        _, recs = run_sweep(SweepConfig("L2.3", (11, 12, 13, 14), (4,), (2,)))
        assert all(r.verdict is Verdict.CONSISTENT for r in recs)

    def test_empty_grid(self):
        text, recs = run_sweep(SweepConfig("T1.2"))
        assert recs == [] and text == ",".join(CSV_COLUMNS) + "\n"

    def test_grid_gate(self):
        with pytest.raises(InapplicableError):
            SweepConfig("T1.2", (12,), (5,), (2,))
        with pytest.raises(ValueError):
            SweepConfig("X9.9")

    def test_parallel_matches_serial(self):
        base = dict(statement_id="T1.3", n_values=(14,), delta_values=(5,), k_values=(4,),
                    mode=Mode.RANDOM_SAMPLE, sample_count=10, seed=3)
        cfg1 = SweepConfig(**base)
        cfg2 = SweepConfig(**base, jobs=2)
        assert run_sweep(cfg1)[0] == run_sweep(cfg2)[0]
        grid = dict(statement_id="L2.3", n_values=(11, 12, 13), delta_values=(4,), k_values=(2,))
        assert run_sweep(SweepConfig(**grid))[0] == run_sweep(SweepConfig(**grid, jobs=3))[0]

    def test_output_and_witness_dir(self, tmp_path):
        out = tmp_path / "report.csv"
        cfg = SweepConfig("T1.1", (12,), (4,), (2,), output=out, witness_dir=tmp_path / "w")
        text, recs = run_sweep(cfg)
        assert out.read_text() == text
        paths = [line.split(",")[-1] for line in text.splitlines()[1:-1]]
        written = [p for p in paths if p]
        assert written and all((tmp_path / "w").joinpath(p.split("/")[-1]).exists() for p in written)

    def test_unwritable_output(self, tmp_path):
        cfg = SweepConfig("L2.3", (13,), (4,), (2,), output=tmp_path / "missing" / "x.csv")
        with pytest.raises(OSError, match="missing"):
            run_sweep(cfg)

    def test_graph6_stream(self):
        from treepack.graph import write_graph6
        lines = (write_graph6(book_graph(13, 4, 1)), write_graph6(complete_graph(6)))
        _, recs = run_sweep(SweepConfig("T1.2", k_values=(2,), mode=Mode.GRAPH6_STREAM, graph6_lines=lines))
        assert [r.verdict for r in recs] == [Verdict.CONSISTENT] * 2


def record(verdict):
    return VerificationRecord("T1.2", 13, 4, 2, "@", True, True, 0.0, verdict)


def test_exit_code_precedence():
    c, i, x = Verdict.CONSISTENT, Verdict.INDETERMINATE, Verdict.COUNTEREXAMPLE
    assert exit_code([record(c)]) == 0
    assert exit_code([record(c), record(i)]) == 2
    assert exit_code([record(i), record(x)]) == 3
    assert exit_code([]) == 0


def test_margin_discipline():
    assert _gap_verdict(True, 5e-9) is Verdict.INDETERMINATE
    assert _gap_verdict(True, -5e-9) is Verdict.INDETERMINATE
    assert _gap_verdict(True, -1e-6) is Verdict.COUNTEREXAMPLE
    assert _gap_verdict(False, -1e-6) is Verdict.CONSISTENT
    assert _gap_verdict(True, 1e-6) is Verdict.CONSISTENT
