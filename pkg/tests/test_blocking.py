import itertools
import math

import pytest

from ftspan import FaultMode, Graph, SpannerParams, ft_greedy_spanner
from ftspan.blocking import (
    BlockingSet,
    extract_blocking_set,
    sample_size,
    subsample_experiment,
    subsample_once,
    survival_probability,
    verify_blocking_set,
)
from ftspan.generators import complete_graph, cycle_graph, random_graph
from ftspan.graph import girth


def _spanner_and_blocking(g, k=3.0, f=1, mode=FaultMode.VERTEX):
    res = ft_greedy_spanner(g, SpannerParams(k=k, f=f, mode=mode))
    return res.graph, extract_blocking_set(res.trace)


class TestExtraction:
    def test_k4_pairs(self):
        h, b = _spanner_and_blocking(complete_graph(4))
        assert b.mode is FaultMode.VERTEX
        assert b.pairs == ((0, (1, 2)), (0, (1, 3)))

    def test_size_budget(self, tiny_corpus):
        for f in (1, 2):
            for name, g in tiny_corpus[::4]:
                res = ft_greedy_spanner(g, SpannerParams(k=3.0, f=f))
                b = extract_blocking_set(res.trace)
                assert len(b) <= f * res.graph.m, name
                assert len(set(b.pairs)) == len(b.pairs), name

    def test_f0_trace_gives_empty_set(self):
        res = ft_greedy_spanner(complete_graph(5), SpannerParams(k=3.0, f=0))
        assert len(extract_blocking_set(res.trace)) == 0

    def test_edge_mode_pairs_are_edges(self):
        h, b = _spanner_and_blocking(complete_graph(5), mode=FaultMode.EDGE)
        assert b.mode is FaultMode.EDGE
        for first, edge in b.pairs:
            assert h.has_edge(*first) and h.has_edge(*edge)
            assert first != edge


class TestCoverage:
    def test_k4_covered_at_k_plus_one(self):
        h, b = _spanner_and_blocking(complete_graph(4))
        rep = verify_blocking_set(h, b, 4)
        assert rep.ok and rep.cycles_checked == 3

    def test_corpus_covered_at_k_plus_one(self, tiny_corpus):
        for mode in (FaultMode.VERTEX, FaultMode.EDGE):
            for name, g in tiny_corpus[::5]:
                h, b = _spanner_and_blocking(g, k=3.0, f=2, mode=mode)
                rep = verify_blocking_set(h, b, 4)
                assert rep.ok, (name, mode, rep.uncovered_cycle)

    def test_uncovered_cycle_is_reported_in_order(self):
        g = complete_graph(4)
        empty = BlockingSet(mode=FaultMode.VERTEX, pairs=())
        rep = verify_blocking_set(g, empty, 3)
        assert not rep.ok
        assert rep.uncovered_cycle == (0, 1, 2)

    def test_pair_must_reference_present_edges(self):
        g = cycle_graph(4)
        b = BlockingSet(mode=FaultMode.VERTEX, pairs=((0, (1, 3)),))
        with pytest.raises(ValueError, match="absent edge"):
            verify_blocking_set(g, b, 3)

    def test_vertex_must_be_in_range(self):
        g = cycle_graph(4)
        b = BlockingSet(mode=FaultMode.VERTEX, pairs=((9, (0, 1)),))
        with pytest.raises(ValueError, match="invalid vertex"):
            verify_blocking_set(g, b, 3)


class TestFormat:
    def test_vertex_round_trip(self):
        _, b = _spanner_and_blocking(complete_graph(5))
        text = b.to_text()
        assert BlockingSet.from_text(text) == b
        assert BlockingSet.from_text(text).to_text() == text

    def test_edge_round_trip(self):
        _, b = _spanner_and_blocking(complete_graph(5), mode=FaultMode.EDGE)
        assert BlockingSet.from_text(b.to_text()) == b

    def test_header_required(self):
        with pytest.raises(ValueError, match="header"):
            BlockingSet.from_text("b 0 1 2\n")

    def test_kind_mismatch_rejected(self):
        text = "# ftspan-blocking mode=VERTEX\nB 0 1 2 3\n"
        with pytest.raises(ValueError, match="malformed"):
            BlockingSet.from_text(text)

    def test_file_round_trip(self, tmp_path):
        _, b = _spanner_and_blocking(complete_graph(4))
        path = tmp_path / "b.blocking"
        b.save(path)
        assert BlockingSet.load(path) == b


class TestSampling:
    def test_sample_size(self):
        assert sample_size(30, 1) == 15
        assert sample_size(30, 2) == 8
        assert sample_size(7, 3) == 2
        with pytest.raises(ValueError):
            sample_size(10, 0)

    def test_survival_probability_frozen(self):
        assert math.isclose(survival_probability(4, 2, 2), 1 / 6)
        assert math.isclose(survival_probability(6, 3, 3), 1 / 20)
        assert survival_probability(5, 2, 3) == 0.0

    def test_survival_probability_matches_enumeration(self):
        # exact check by counting r-subsets containing a fixed arity-set
        for n, r, arity in [(6, 3, 2), (7, 4, 3), (8, 3, 3), (8, 5, 4)]:
            hits = 0
            total = 0
            for combo in itertools.combinations(range(n), r):
                total += 1
                if set(range(arity)) <= set(combo):
                    hits += 1
            assert math.isclose(survival_probability(n, r, arity), hits / total)

    def test_subsample_once_deterministic(self):
        h, b = _spanner_and_blocking(complete_graph(8))
        a = subsample_once(h, b, 1, 4, seed=42)
        c = subsample_once(h, b, 1, 4, seed=42)
        assert a == c
        assert len(a.sampled) == sample_size(8, 1)

    def test_subsample_girth_theorem(self):
        # covering blocking set + pruning implies girth above the bound
        for seed in range(4):
            g = random_graph(12, 0.7, seed=seed)
            h, b = _spanner_and_blocking(g, k=3.0, f=1)
            assert verify_blocking_set(h, b, 4).ok
            for trial_seed in range(30):
                out = subsample_once(h, b, 1, 4, seed=trial_seed)
                assert out.girth_ok
                final = Graph(
                    h.n,
                    [
                        (u, v, w)
                        for u, v, w in h.edges
                        if u in set(out.sampled) and v in set(out.sampled)
                    ],
                )
                assert out.edges_induced == final.m

    def test_experiment_rejects_non_covering_set(self):
        g = complete_graph(4)
        empty = BlockingSet(mode=FaultMode.VERTEX, pairs=())
        with pytest.raises(ValueError, match="uncovered"):
            subsample_experiment(g, empty, 1, 3, trials=2)

    def test_experiment_aggregates(self):
        h, b = _spanner_and_blocking(complete_graph(10), f=1)
        rep = subsample_experiment(h, b, 1, 4, trials=40, seed=5)
        assert rep.trials == 40
        assert rep.girth_ok_count == 40
        assert rep.r == 5
        assert not rep.degenerate_sample
        assert rep.outcomes[3].seed == 5 * 1_000_003 + 3
        csv = rep.to_csv()
        lines = csv.splitlines()
        assert lines[0].startswith("# ftspan-subsample")
        assert "trial,seed,edges_induced" in csv
        assert len([ln for ln in lines if not ln.startswith("#")]) == 41

    def test_degenerate_flag(self):
        h, b = _spanner_and_blocking(complete_graph(4), f=1)
        rep = subsample_experiment(h, b, 1, 4, trials=5)
        assert rep.r == 2
        assert rep.degenerate_sample
        assert rep.expected_pairs_surviving == 0.0
