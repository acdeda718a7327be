"""Worst cross-path gaps over seeded random configurations on every axis."""

import argparse
import time

from mink4gauss.verification import CHECKS, sweep_axis


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=200)
    ap.add_argument("--seed", type=int, default=42)
    args = ap.parse_args()
    for axis in ("spacelike", "timelike", "lightlike"):
        t0 = time.perf_counter()
        res = sweep_axis(axis, args.n, args.seed)
        dt = time.perf_counter() - t0
        print(f"{axis} ({args.n} configs, {dt:.1f}s)")
        for name in CHECKS:
            value, where = res.worst[name]
            print(f"  {name:<18} {value:.3e}  at {where}")


if __name__ == "__main__":
    main()
