import pytest

from ftspan.cli import main
from ftspan.blocking import BlockingSet
from ftspan.graph import load_graph, parse_graph
from ftspan.spanner import GreedyTrace


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestGenerate:
    def test_complete_to_stdout(self, capsys):
        code, out, _ = run(capsys, "generate", "complete:5")
        assert code == 0
        g = parse_graph(out)
        assert g.n == 5 and g.m == 10

    def test_gnp_with_weights_to_file(self, capsys, tmp_path):
        path = tmp_path / "g.graph"
        code, _, _ = run(
            capsys, "generate", "gnp:12,0.5", "--weights", "1,2", "--seed", "3",
            "-o", str(path),
        )
        assert code == 0
        g = load_graph(path)
        assert g.n == 12 and all(1 <= w < 2 for _, _, w in g.edges)

    def test_unknown_family_is_input_error(self, capsys):
        code, _, err = run(capsys, "generate", "torus:5")
        assert code == 2 and "unknown family" in err

    def test_all_families_parse(self, capsys):
        for fam in ("cycle:4", "path:4", "petersen", "biclique:2,2"):
            code, out, _ = run(capsys, "generate", fam)
            assert code == 0 and out.startswith("p ")


class TestSpannerVerify:
    @pytest.fixture
    def paths(self, capsys, tmp_path):
        g = tmp_path / "g.graph"
        h = tmp_path / "h.graph"
        t = tmp_path / "run.trace"
        assert run(capsys, "generate", "complete:8", "-o", str(g))[0] == 0
        code, out, _ = run(
            capsys, "spanner", str(g), "-k", "3", "-f", "1",
            "--trace", str(t), "-o", str(h),
        )
        assert code == 0 and "kept" in out
        return g, h, t

    def test_spanner_writes_subgraph_and_trace(self, capsys, paths):
        g, h, t = paths
        hg = load_graph(h)
        assert hg.is_subgraph_of(load_graph(g))
        trace = GreedyTrace.load(t)
        assert trace.replay() == hg

    def test_verify_ok_and_fail_exit_codes(self, capsys, paths):
        g, h, _ = paths
        code, out, _ = run(capsys, "verify", str(g), str(h), "-k", "3", "-f", "1")
        assert code == 0 and out.startswith("OK stretch=")
        code, out, _ = run(capsys, "verify", str(g), str(h), "-k", "3", "-f", "4")
        assert code == 1 and out.startswith("FAIL stretch=")

    def test_verify_budget_exit_code(self, capsys, paths):
        g, h, _ = paths
        code, _, err = run(
            capsys, "verify", str(g), str(h), "-k", "3", "-f", "2", "--budget", "10"
        )
        assert code == 2 and "budget" in err

    def test_verify_sampled(self, capsys, paths):
        g, h, _ = paths
        code, out, _ = run(
            capsys, "verify", str(g), str(h), "-k", "3", "-f", "1",
            "--method", "sampled", "--samples", "25", "--seed", "7",
        )
        assert code == 0 and out.startswith("OK")

    def test_spanner_stdout_is_parseable(self, capsys, tmp_path):
        g = tmp_path / "g.graph"
        run(capsys, "generate", "cycle:6", "-o", str(g))
        code, out, _ = run(capsys, "spanner", str(g), "-k", "3")
        assert code == 0
        assert parse_graph(out).m == 6

    def test_missing_file_is_input_error(self, capsys, tmp_path):
        code, _, err = run(
            capsys, "verify", str(tmp_path / "nope.graph"), str(tmp_path / "nope2"),
            "-k", "3",
        )
        assert code == 2 and "error:" in err


class TestBlockingSubsample:
    @pytest.fixture
    def artifacts(self, capsys, tmp_path):
        g = tmp_path / "g.graph"
        h = tmp_path / "h.graph"
        t = tmp_path / "run.trace"
        b = tmp_path / "pairs.blocking"
        run(capsys, "generate", "complete:10", "-o", str(g))
        run(capsys, "spanner", str(g), "-k", "3", "-f", "1", "--trace", str(t), "-o", str(h))
        return g, h, t, b

    def test_blocking_extract_and_check(self, capsys, artifacts):
        _, h, t, b = artifacts
        code, out, _ = run(capsys, "blocking", str(t), "--max-len", "4", "-o", str(b))
        assert code == 0 and out.startswith("coverage OK")
        assert len(BlockingSet.load(b)) > 0

    def test_subsample_runs_clean(self, capsys, artifacts, tmp_path):
        _, h, t, b = artifacts
        run(capsys, "blocking", str(t), "-o", str(b))
        csv = tmp_path / "sub.csv"
        code, out, _ = run(
            capsys, "subsample", str(h), str(b), "-f", "1", "--max-len", "4",
            "--trials", "15", "-o", str(csv),
        )
        assert code == 0 and out.startswith("girth_ok 15/15")
        body = csv.read_text()
        assert "trial,seed,edges_induced" in body

    def test_subsample_to_stdout(self, capsys, artifacts):
        _, h, t, b = artifacts
        run(capsys, "blocking", str(t), "-o", str(b))
        code, out, _ = run(
            capsys, "subsample", str(h), str(b), "-f", "1", "--max-len", "4",
            "--trials", "5",
        )
        assert code == 0
        assert out.startswith("# ftspan-subsample")


class TestExperimentCli:
    def test_csv_output(self, capsys, tmp_path):
        out_file = tmp_path / "exp.csv"
        code, _, _ = run(
            capsys, "experiment", "--ns", "10,14", "--fs", "1", "-k", "3",
            "-o", str(out_file),
        )
        assert code == 0
        text = out_file.read_text()
        assert "# fit f=1 n-exponent=" in text
        assert text.count("\n") >= 4

    def test_stdout_output(self, capsys):
        code, out, _ = run(capsys, "experiment", "--ns", "8,10", "--fs", "1", "-k", "3")
        assert code == 0 and out.startswith("# ftspan-scaling")


class TestLowerBoundCli:
    def test_audit_table(self, capsys):
        code, out, _ = run(capsys, "lower-bound")
        lines = out.splitlines()
        assert len(lines) == 5
        assert lines[0].startswith("product")
        assert code == 1  # one reading fails on the cartesian product
        assert any("FAIL" in ln for ln in lines[1:])
        assert sum("PASS" in ln for ln in lines[1:]) == 3

    def test_single_combo_pass(self, capsys, tmp_path):
        b = tmp_path / "claim.blocking"
        p = tmp_path / "prod.graph"
        code, out, _ = run(
            capsys, "lower-bound", "--product", "cartesian",
            "--reading", "same-base-edge", "--blocking-out", str(b),
            "--graph-out", str(p),
        )
        assert code == 0 and "PASS" in out
        assert len(BlockingSet.load(b)) == 6
        assert load_graph(p).n == 12

    def test_custom_base_and_budget(self, capsys):
        code, out, _ = run(capsys, "lower-bound", "--base", "cycle:8", "-f", "8")
        assert code in (0, 1)
        assert len(out.splitlines()) == 5


class TestVersionFlag:
    def test_version_exits_zero(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["--version"])
        assert exc.value.code == 0
