import math

import pytest

from ftspan.experiment import (
    ExperimentConfig,
    ScalingRow,
    fit_exponent,
    fit_summaries,
    moore_reference,
    rows_to_csv,
    run_scaling_experiment,
)
from ftspan.graph import FaultMode


class TestMooreReference:
    def test_odd_stretch_values(self):
        assert moore_reference(100, 1, 3) == 100**1.5
        assert math.isclose(moore_reference(100, 4, 3), 100**1.5 * 2.0)
        assert moore_reference(64, 1, 5) == 64 ** (4 / 3)

    def test_even_or_fractional_stretch_undefined(self):
        assert moore_reference(100, 1, 4) is None
        assert moore_reference(100, 1, 2.5) is None
        assert moore_reference(100, 0, 3) is None


class TestFits:
    def test_exact_power_law_recovered(self):
        xs = [10, 20, 40, 80]
        ys = [3 * x**1.5 for x in xs]
        assert math.isclose(fit_exponent(xs, ys), 1.5, rel_tol=1e-12)

    def test_needs_two_distinct_points(self):
        with pytest.raises(ValueError):
            fit_exponent([5, 5], [1, 2])


class TestScalingRuns:
    def test_rows_deterministic_except_runtime(self):
        cfg = ExperimentConfig(ns=(12, 16), fs=(1,), k=3.0, seed=4)
        a = run_scaling_experiment(cfg)
        b = run_scaling_experiment(cfg)
        strip = lambda rows: [
            (r.n, r.f, r.k, r.mode, r.seed, r.edges_in_g, r.edges_in_h, r.moore_reference)
            for r in rows
        ]
        assert strip(a) == strip(b)

    def test_rows_sorted_and_sized(self):
        cfg = ExperimentConfig(ns=(16, 12), fs=(2, 1), k=3.0, repeats=2)
        rows = run_scaling_experiment(cfg)
        assert len(rows) == 8
        keys = [(r.n, r.f, r.seed) for r in rows]
        assert keys == sorted(keys)

    def test_unit_weight_config_supported(self):
        cfg = ExperimentConfig(ns=(10,), fs=(1,), k=3.0, weight_range=None)
        rows = run_scaling_experiment(cfg)
        assert rows[0].edges_in_g == 45

    def test_sparse_density(self):
        cfg = ExperimentConfig(ns=(20,), fs=(1,), k=3.0, density=0.3)
        rows = run_scaling_experiment(cfg)
        assert 0 < rows[0].edges_in_g < 190

    def test_csv_shape(self):
        cfg = ExperimentConfig(ns=(10, 14), fs=(1, 2), k=3.0)
        rows = run_scaling_experiment(cfg)
        csv = rows_to_csv(rows)
        lines = csv.splitlines()
        assert lines[0] == "# ftspan-scaling rows=4"
        fits = [ln for ln in lines if ln.startswith("# fit")]
        assert len(fits) == 4  # two f-groups over n, two n-groups over f
        header = [ln for ln in lines if ln.startswith("n,")][0]
        assert header == "n,f,k,mode,edges_in_g,edges_in_h,moore_reference,runtime_ms,seed"
        data = [ln for ln in lines if not ln.startswith(("#", "n,"))]
        assert len(data) == 4

    def test_even_stretch_leaves_moore_empty(self):
        cfg = ExperimentConfig(ns=(8,), fs=(1,), k=4.0)
        rows = run_scaling_experiment(cfg)
        assert rows[0].moore_reference is None
        data_line = rows_to_csv(rows).splitlines()[-1]
        assert ",," in data_line

    def test_fit_summaries_use_both_axes(self):
        rows = [
            ScalingRow(10, 1, 3.0, FaultMode.VERTEX, 0, 45, 20, 31.6, 1.0),
            ScalingRow(20, 1, 3.0, FaultMode.VERTEX, 1, 190, 55, 89.4, 1.0),
            ScalingRow(10, 2, 3.0, FaultMode.VERTEX, 2, 45, 28, 44.7, 1.0),
            ScalingRow(20, 2, 3.0, FaultMode.VERTEX, 3, 190, 80, 126.5, 1.0),
        ]
        lines = fit_summaries(rows)
        assert any(ln.startswith("fit f=1 n-exponent=") for ln in lines)
        assert any(ln.startswith("fit n=20 f-exponent=") for ln in lines)
