"""Command line: ``mink4 {eval,verify,classify,family,scan}``.

Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 domain error.
Errors go to stderr as one line of JSON.
"""

import argparse
import csv
import io
import json
import math
import sys

import numpy as np

from .classification import (
    DEFAULT_TOL,
    classify,
    decompose,
    firstkind_check,
    ode_residual,
    sample_plan,
)
from .closed_forms import FLAT_FAMILIES, corollary_closed, lk_gauss_closed, special_case_closed
from .errors import DomainError, IndeterminateDecomposition, Mink4Error
from .hypersurface import AxisKind, RotSurface, SurfPoint, principal_curvatures
from .lk_operator import lk_gauss_generic, lk_trace, mean_curvatures
from .profiles import FAMILY_AXIS, family_profile
from .verification import CHECKS, parallel_map, profile_configs, run_sweep
from .sampling import random_configs

SCHEMA = "mink4-gauss/1"
SCAN_COLUMNS = ("s", "t", "w", "k", "norm", "m", "n", "residual")


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# deterministic output


def fmt_float(x):
    x = float(x)
    if not math.isfinite(x):
        return "null"
    if x == 0.0:
        return "0.0" if math.copysign(1.0, x) > 0 else "-0.0"
    text = format(x, ".17g")
    return text if any(ch in text for ch in ".e") else text + ".0"


def dumps(obj):
    """JSON with insertion-ordered keys and 17-significant-digit floats."""
    if obj is None or isinstance(obj, bool):
        return json.dumps(obj)
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return fmt_float(obj)
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        return "{" + ",".join(f"{json.dumps(str(k))}:{dumps(v)}" for k, v in obj.items()) + "}"
    if isinstance(obj, (list, tuple, np.ndarray)):
        return "[" + ",".join(dumps(v) for v in obj) + "]"
    if hasattr(obj, "tolist"):
        return dumps(obj.tolist())
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def csv_text(rows, columns):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for r in rows:
        w.writerow([fmt_float(r[c]) if isinstance(r[c], float) else r[c] for c in columns])
    return buf.getvalue()


# ---------------------------------------------------------------------------
# argument parsing


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _point(text):
    try:
        return SurfPoint.parse(text)
    except (ValueError, TypeError) as e:
        raise argparse.ArgumentTypeError(f"bad point {text!r}: expected s,t,w") from e


def _axis(text):
    try:
        return AxisKind.parse(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from e


def _floats(text):
    try:
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"bad number list {text!r}") from e


def _range(text):
    vals = _floats(text)
    if len(vals) != 2 or not vals[0] < vals[1]:
        raise argparse.ArgumentTypeError("range must be lo,hi with lo < hi")
    return tuple(vals)


def build_parser():
    p = _Parser(prog="mink4", description="L_k operators on the Gauss map of rotational hypersurfaces in E^4_1")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, k_choices=(1, 2), need_profile=True):
        sp.add_argument("--axis", type=_axis, required=True)
        sp.add_argument("--profile", required=need_profile, help="profile spec, e.g. 'linear:0.5,0'")
        sp.add_argument("--k", type=int, choices=k_choices, default=None)
        sp.add_argument("--out", help="write output here instead of stdout")

    e = sub.add_parser("eval", help="evaluate L_k N on all three paths at one point")
    common(e)
    e.add_argument("--at", type=_point, required=True, help="s,t,w")

    v = sub.add_parser("verify", help="seeded cross-path invariant sweep")
    common(v, need_profile=False)
    v.add_argument("--samples", type=int, default=200)
    v.add_argument("--seed", type=int, default=42)
    v.add_argument("--tol", type=float, default=DEFAULT_TOL)

    c = sub.add_parser("classify", help="Gauss-map type verdict")
    common(c)
    c.add_argument("--tol", type=float, default=DEFAULT_TOL)
    c.add_argument("--s-range", type=_range, default=None)

    f = sub.add_parser("family", help="materialize a named family and run its theorem checks")
    f.add_argument("--name", required=True, choices=sorted(k for k, v in FAMILY_AXIS.items() if v))
    f.add_argument("--params", type=_floats, required=True)
    f.add_argument("--sign", choices=("+", "-"), default="+")
    f.add_argument("--k", type=int, choices=(1, 2), default=None)
    f.add_argument("--tol", type=float, default=DEFAULT_TOL)
    f.add_argument("--out")

    s = sub.add_parser("scan", help="L_k N norm and decomposition over an s grid")
    common(s)
    s.add_argument("--s-range", type=_range, default=None)
    s.add_argument("--n", type=int, default=50)
    s.add_argument("--t", type=float, default=0.0)
    s.add_argument("--w", type=float, default=0.0)
    s.add_argument("--format", choices=("csv", "json"), default="csv")
    return p


# ---------------------------------------------------------------------------
# commands


def _ks(args):
    return (args.k,) if args.k else (1, 2)


def cmd_eval(args):
    surf = RotSurface(args.axis, args.profile)
    p = args.at
    k = args.k or 1
    closed = lk_gauss_closed(surf, p, k).result.as_array()
    generic = lk_gauss_generic(surf, p, k).as_array()
    trace = lk_trace(surf, p, k).as_array()
    mc = mean_curvatures(surf, p.s)
    cd = principal_curvatures(surf, p.s)
    diff = max(np.max(np.abs(closed - generic)), np.max(np.abs(trace - generic)))
    report = {
        "schema": SCHEMA,
        "command": "eval",
        "axis": surf.axis.value,
        "profile": surf.profile.spec,
        "k": k,
        "point": p.tolist(),
        "lkN_closed": closed,
        "lkN_generic": generic,
        "lkN_trace": trace,
        "curvatures": list(cd.kappas),
        "ak": list(mc.a),
        "Hk": list(mc.H),
        "max_path_diff": float(diff),
    }
    return 0, dumps(report) + "\n"


def cmd_verify(args):
    ks = _ks(args)
    if args.samples < 1:
        raise UsageError("--samples must be positive")
    if args.profile:
        surf = RotSurface(args.axis, args.profile)
        configs = profile_configs(surf, args.samples, args.seed)
    else:
        configs = random_configs(args.axis, args.samples, args.seed)
    result = run_sweep(configs, ks)
    checks = {}
    for name in CHECKS:
        value, where = result.worst[name]
        checks[name] = {"worst": value, "where": where, "pass": bool(value <= args.tol)}
    ok = all(c["pass"] for c in checks.values())
    report = {
        "schema": SCHEMA,
        "command": "verify",
        "axis": AxisKind.parse(args.axis).value,
        "profile": RotSurface(args.axis, args.profile).profile.spec if args.profile else None,
        "k": list(ks),
        "samples": args.samples,
        "seed": args.seed,
        "tol": args.tol,
        "checks": checks,
        "pass": ok,
    }
    return (0 if ok else 1), dumps(report) + "\n"


def _verdict_json(surf, v):
    return {
        "schema": SCHEMA,
        "command": "classify",
        "axis": surf.axis.value,
        "profile": surf.profile.spec,
        "k": v.k,
        "kind": v.kind.value,
        "C": v.C.tolist(),
        "ratio": v.ratio,
        "tol": v.tol,
        "margins": dict(sorted(v.margins.items())),
        "evidence": [
            {"point": e.point.tolist(), "norm": e.norm, "m": e.m, "n": e.n, "residual": e.residual}
            for e in v.evidence
        ],
    }


def cmd_classify(args):
    surf = RotSurface(args.axis, args.profile)
    plan = sample_plan(surf, s_range=args.s_range)
    verdicts = [classify(surf, plan, k, args.tol) for k in _ks(args)]
    if len(verdicts) == 1:
        return 0, dumps(_verdict_json(surf, verdicts[0])) + "\n"
    return 0, "".join(dumps(_verdict_json(surf, v)) + "\n" for v in verdicts)


def _family_checks(surf, ks, tol):
    """Theorem checks for a family; returns (asserted checks, recorded comparisons)."""
    fam = surf.profile.family
    lo, hi = surf.profile.default_range()
    checks, recorded = {}, {}
    pts = sample_plan(surf, n_s=20 if fam.startswith("firstkind") else 8)
    if fam.startswith("firstkind"):
        svals = sorted({p.s for p in pts})
        checks["ode_residual_k1"] = max(abs(ode_residual(surf, s, 1, "firstkind")) for s in svals)
        n_abs = 0.0
        for p in pts:
            d = decompose(surf, p, 1)
            n_abs = max(n_abs, abs(d.n) / (1 + d.lkN.norm()))
        checks["decomposition_n"] = n_abs
        mid = SurfPoint(0.5 * (lo + hi), 0.2, 0.1)
        recorded["theorem_comparison"] = firstkind_check(surf, mid)
    else:
        case = "flat" if fam in FLAT_FAMILIES else "minimal"
        for k in ks:
            cor = spec_gap = gen_gap = 0.0
            for p in pts:
                g = lk_gauss_generic(surf, p, k).as_array()
                scale = 1.0 + np.linalg.norm(g)
                a = special_case_closed(surf, p, case, k).as_array()
                c = lk_gauss_closed(surf, p, k).result.as_array()
                spec_gap = max(spec_gap, np.max(np.abs(a - g)) / scale)
                gen_gap = max(gen_gap, np.max(np.abs(c - g)) / scale)
                if fam != "minimal-l":
                    cor = max(cor, np.max(np.abs(corollary_closed(surf, p, k).as_array() - g)) / scale)
            checks[f"closed_k{k}"] = float(gen_gap)
            checks[f"{case}_form_k{k}"] = float(spec_gap)
            if fam != "minimal-l":
                checks[f"corollary_k{k}"] = float(cor)
    return {n: {"worst": float(v), "pass": bool(v <= tol)} for n, v in checks.items()}, recorded


def cmd_family(args):
    prof = family_profile(args.name, args.params, 1 if args.sign == "+" else -1)
    surf = RotSurface(prof.axis, prof)
    ks = (args.k,) if args.k else (1, 2)
    checks, recorded = _family_checks(surf, ks, args.tol)
    ok = all(c["pass"] for c in checks.values())
    report = {
        "schema": SCHEMA,
        "command": "family",
        "axis": surf.axis.value,
        "profile": prof.spec,
        "k": list(ks),
        "s_range": list(prof.default_range()),
        "tol": args.tol,
        "checks": checks,
        "recorded": recorded,
        "pass": ok,
    }
    return (0 if ok else 1), dumps(report) + "\n"


def cmd_scan(args):
    surf = RotSurface(args.axis, args.profile)
    lo, hi = args.s_range or surf.profile.default_range()
    if args.n < 1:
        raise UsageError("--n must be positive")
    ss = np.linspace(lo, hi, args.n)
    jobs = [(float(s), k) for s in ss for k in _ks(args)]

    def row(job):
        s, k = job
        p = SurfPoint(s, args.t, args.w)
        L = lk_gauss_generic(surf, p, k)
        try:
            d = decompose(surf, p, k)
            m, n, res = d.m, d.n, d.residual
        except IndeterminateDecomposition:
            m = n = res = math.nan
        return {"s": s, "t": args.t, "w": args.w, "k": k, "norm": L.norm(), "m": m, "n": n, "residual": res}

    rows = parallel_map(row, jobs)
    if args.format == "json":
        report = {"schema": SCHEMA, "command": "scan", "axis": surf.axis.value,
                  "profile": surf.profile.spec, "columns": list(SCAN_COLUMNS),
                  "rows": [[r[c] for c in SCAN_COLUMNS] for r in rows]}
        return 0, dumps(report) + "\n"
    return 0, csv_text(rows, SCAN_COLUMNS)


COMMANDS = {"eval": cmd_eval, "verify": cmd_verify, "classify": cmd_classify, "family": cmd_family, "scan": cmd_scan}


def _error(kind, message, code):
    sys.stderr.write(dumps({"schema": SCHEMA, "error": kind, "message": str(message), "exit": code}) + "\n")
    return code


def run_cli(argv=None):
    """Run one command; returns the exit code."""
    try:
        args = build_parser().parse_args(argv)
        code, text = COMMANDS[args.command](args)
    except UsageError as e:
        return _error("usage", e, 2)
    except DomainError as e:
        return _error(type(e).__name__, e, 3)
    except Mink4Error as e:
        return _error(type(e).__name__, e, 3)
    except ValueError as e:
        return _error("usage", e, 2)
    if getattr(args, "out", None):
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


def main():
    sys.exit(run_cli())
