"""Spanner size scaling experiments and log-log exponent fits."""

import time
from dataclasses import dataclass

import numpy as np

from .generators import random_graph
from .graph import FaultMode
from .spanner import SpannerParams, ft_greedy_spanner


@dataclass(frozen=True)
class ExperimentConfig:
    """Grid of instance sizes and fault budgets for one scaling sweep.

    ``density`` is the G(n, p) edge probability (1.0 gives complete graphs);
    ``weight_range`` draws uniform weights, None keeps unit weights.  Unit
    weights on dense graphs make the greedy outcome collapse to a degenerate
    family, so weighted inputs are the default.
    """

    ns: tuple
    fs: tuple
    k: float
    mode: FaultMode = FaultMode.VERTEX
    density: float = 1.0
    weight_range: tuple | None = (1.0, 2.0)
    seed: int = 0
    repeats: int = 1


@dataclass(frozen=True)
class ScalingRow:
    n: int
    f: int
    k: float
    mode: FaultMode
    seed: int
    edges_in_g: int
    edges_in_h: int
    moore_reference: float | None
    runtime_ms: float


def moore_reference(n, f, k):
    """Size yardstick n^(1 + 1/kappa) * f^(1 - 1/kappa), kappa = (k + 1) / 2.

    Defined for odd integer stretch and f >= 1; otherwise None, and the
    experiment leaves the column empty.
    """
    if f < 1 or k != int(k) or int(k) % 2 == 0:
        return None
    kappa = (k + 1) / 2
    return float(n ** (1 + 1 / kappa) * f ** (1 - 1 / kappa))


def run_scaling_experiment(config):
    """One greedy run per (n, f, repeat) cell, rows sorted by (n, f, seed).

    Cell seeds are derived as ((seed * 1000003 + n) * 1000003 + f) * 1000003
    + repeat, so any sub-grid of a sweep reproduces the full sweep's rows.
    """
    rows = []
    for n in config.ns:
        for f in config.fs:
            for rep in range(config.repeats):
                cell = (config.seed * 1_000_003 + n) * 1_000_003 + f
                cell = cell * 1_000_003 + rep
                g = random_graph(n, config.density, cell, config.weight_range)
                params = SpannerParams(k=config.k, f=f, mode=config.mode)
                t0 = time.perf_counter()
                result = ft_greedy_spanner(g, params)
                dt_ms = (time.perf_counter() - t0) * 1000.0
                rows.append(
                    ScalingRow(
                        n=n,
                        f=f,
                        k=float(config.k),
                        mode=config.mode,
                        seed=cell,
                        edges_in_g=g.m,
                        edges_in_h=result.graph.m,
                        moore_reference=moore_reference(n, f, config.k),
                        runtime_ms=dt_ms,
                    )
                )
    rows.sort(key=lambda r: (r.n, r.f, r.seed))
    return tuple(rows)


def fit_exponent(xs, ys):
    """Slope of the least-squares line through (log x, log y)."""
    xs = np.asarray(xs, dtype=float)
    ys = np.asarray(ys, dtype=float)
    if len(xs) < 2 or len(set(xs.tolist())) < 2:
        raise ValueError("need at least two distinct x values to fit")
    slope, _ = np.polyfit(np.log(xs), np.log(ys), 1)
    return float(slope)


def fit_summaries(rows):
    """Human-readable exponent fits: size vs n per f, and size vs f per n."""
    lines = []
    fs = sorted({r.f for r in rows})
    ns = sorted({r.n for r in rows})
    for f in fs:
        pts = [(r.n, r.edges_in_h) for r in rows if r.f == f]
        if len({p[0] for p in pts}) >= 2:
            exp = fit_exponent([p[0] for p in pts], [p[1] for p in pts])
            lines.append(f"fit f={f} n-exponent={exp!r}")
    for n in ns:
        pts = [(r.f, r.edges_in_h) for r in rows if r.n == n and r.f >= 1]
        if len({p[0] for p in pts}) >= 2:
            exp = fit_exponent([p[0] for p in pts], [p[1] for p in pts])
            lines.append(f"fit n={n} f-exponent={exp!r}")
    return lines


def rows_to_csv(rows):
    """CSV with leading fit comments; runtime_ms varies across machines."""
    lines = [f"# ftspan-scaling rows={len(rows)}"]
    lines.extend(f"# {s}" for s in fit_summaries(rows))
    lines.append("n,f,k,mode,edges_in_g,edges_in_h,moore_reference,runtime_ms,seed")
    for r in rows:
        moore = "" if r.moore_reference is None else repr(r.moore_reference)
        lines.append(
            f"{r.n},{r.f},{r.k!r},{r.mode.name},{r.edges_in_g},{r.edges_in_h},"
            f"{moore},{r.runtime_ms:.3f},{r.seed}"
        )
    return "\n".join(lines) + "\n"
