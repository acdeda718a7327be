"""Cross-path invariant sweep used by ``verify`` and the acceptance suite.

Every check reduces a configuration to one non-negative number on a scale
where a single tolerance is meaningful.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
import os

import numpy as np

from .classification import decompose
from .closed_forms import ak_closed, lk_gauss_closed
from .errors import IndeterminateDecomposition
from .hypersurface import (
    AxisKind,
    SurfPoint,
    check_point,
    frame_jets,
    principal_curvatures,
    shape_eigenvalues,
    shape_operator_numeric,
)
from .lk_operator import ak_from_kappas, lk_gauss_generic, lk_trace
from .minkowski import mink_dot
from .sampling import Config, random_configs

CHECKS = (
    "normal_unit",
    "normal_tangent",
    "curvatures",
    "ak",
    "closed_vs_generic",
    "trace_vs_generic",
    "decomposition",
    "printed_m",
)


def worker_count():
    """Thread cap from MINK4_THREADS (0 = sequential); defaults to the CPU count."""
    raw = os.environ.get("MINK4_THREADS")
    if raw is None:
        return min(8, os.cpu_count() or 1)
    n = int(raw)
    if n < 0:
        raise ValueError("MINK4_THREADS must be >= 0")
    return n


def parallel_map(fn, items, threads=None):
    """Order-preserving map, fanned out over a thread pool when allowed."""
    threads = worker_count() if threads is None else threads
    if threads <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


def normal_metrics(surface, p):
    gamma, normal = frame_jets(surface, p)
    N = np.array([x.value for x in normal])
    unit = abs(mink_dot(N, N) - 1.0)
    tang = max(abs(mink_dot(N, np.array([g.gradient()[i] for g in gamma]))) for i in range(3))
    return unit, tang


def curvature_metric(surface, p):
    cd = principal_curvatures(surface, p.s)
    ref = np.sort(np.array(cd.kappas))
    eig = shape_eigenvalues(shape_operator_numeric(surface, p))
    return float(np.max(np.abs(eig - ref)) / (np.max(np.abs(ref)) + 1e-14))


def ak_metric(surface, s):
    f, f1, f2, _ = check_point(surface, SurfPoint(s))
    cd = principal_curvatures(surface, s)
    closed = ak_closed(surface.axis, s, f, f1, f2)
    sym = ak_from_kappas(*cd.kappas)
    k1, k2 = abs(cd.kappa1), abs(cd.kappa2)
    scales = (k1 + 2 * k2, 2 * k1 * k2 + k2 * k2, k1 * k2 * k2)
    return max(abs(c - r) / max(sc, 1e-300) if sc > 0 else abs(c - r) for c, r, sc in zip(closed, sym, scales))


def path_metrics(surface, p, k):
    g = lk_gauss_generic(surface, p, k).as_array()
    c = lk_gauss_closed(surface, p, k).result.as_array()
    t = lk_trace(surface, p, k).as_array()
    scale = 1.0 + np.linalg.norm(g)
    return float(np.max(np.abs(c - g)) / scale), float(np.max(np.abs(t - g)) / scale)


def decomposition_metrics(surface, p, k):
    try:
        d = decompose(surface, p, k)
    except IndeterminateDecomposition:
        return 0.0, 0.0
    gap_m = d.printed_agreement[0] if surface.axis is not AxisKind.LIGHTLIKE else 0.0
    return d.residual / (1.0 + d.lkN.norm()), gap_m


def check_config(cfg, ks=(1, 2)):
    """All invariant metrics for one configuration (worst over the requested k)."""
    s, p = cfg.surface, cfg.point
    unit, tang = normal_metrics(s, p)
    out = {
        "normal_unit": unit,
        "normal_tangent": tang,
        "curvatures": curvature_metric(s, p),
        "ak": ak_metric(s, p.s),
        "closed_vs_generic": 0.0,
        "trace_vs_generic": 0.0,
        "decomposition": 0.0,
        "printed_m": 0.0,
    }
    for k in ks:
        cg, tg = path_metrics(s, p, k)
        dr, pm = decomposition_metrics(s, p, k)
        out["closed_vs_generic"] = max(out["closed_vs_generic"], cg)
        out["trace_vs_generic"] = max(out["trace_vs_generic"], tg)
        out["decomposition"] = max(out["decomposition"], dr)
        out["printed_m"] = max(out["printed_m"], pm)
    return {k: float(v) for k, v in out.items()}


def profile_configs(surface, n, seed):
    """``n`` seeded points on one fixed surface."""
    rng = np.random.default_rng(int(seed))
    lo, hi = surface.profile.default_range()
    out = []
    while len(out) < n:
        p = SurfPoint(float(rng.uniform(lo, hi)), float(rng.uniform(-1, 1)), float(rng.uniform(-1, 1)))
        check_point(surface, p)
        out.append(Config(surface, p))
    return out


@dataclass(frozen=True)
class SweepResult:
    worst: dict  # check -> (value, config description)
    n: int

    def passed(self, tol):
        return {name: v <= tol for name, (v, _) in self.worst.items()}


def run_sweep(configs, ks=(1, 2), threads=None):
    rows = parallel_map(lambda c: check_config(c, ks), configs, threads)
    worst = {}
    for name in CHECKS:
        i = int(np.argmax([r[name] for r in rows]))
        worst[name] = (rows[i][name], configs[i].describe())
    return SweepResult(worst, len(configs))


def sweep_axis(axis, n, seed, ks=(1, 2), threads=None):
    return run_sweep(random_configs(axis, n, seed), ks, threads)
