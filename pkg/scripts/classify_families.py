"""Gauss-map verdicts for a table of profiles on each axis."""

import argparse

from mink4gauss.classification import classify
from mink4gauss.hypersurface import RotSurface

TABLE = [
    ("spacelike", "const:1"),
    ("spacelike", "linear:0.5,0"),
    ("spacelike", "tanh:0.6"),
    ("spacelike", "flat-s:1"),
    ("spacelike", "minimal-s:1"),
    ("spacelike", "firstkind-s:1,0,0,+"),
    ("timelike", "linear:2,0"),
    ("timelike", "flat-t:3"),
    ("timelike", "minimal-t:2"),
    ("timelike", "firstkind-t:2,0.5,0,+"),
    ("lightlike", "flat-l:0.3,1"),
    ("lightlike", "minimal-l:1,0,0.2"),
]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--tol", type=float, default=1e-7)
    args = ap.parse_args()
    print(f"{'axis':<10} {'profile':<24} {'k=1':<12} {'k=2':<12}")
    for axis, prof in TABLE:
        surf = RotSurface(axis, prof)
        kinds = [classify(surf, k=k, tol=args.tol).kind.value for k in (1, 2)]
        print(f"{axis:<10} {prof:<24} {kinds[0]:<12} {kinds[1]:<12}")


if __name__ == "__main__":
    main()
