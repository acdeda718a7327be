"""Shows where the printed formulas deviate from the generic path, and by how much."""

from mink4gauss.classification import firstkind_check
from mink4gauss.closed_forms import lk_gauss_closed, r1_time_printed
from mink4gauss.hypersurface import RotSurface, SurfPoint, check_point
from mink4gauss.lk_operator import lk_gauss_generic
from mink4gauss.profiles import family_profile


def timelike_r1():
    surf = RotSurface("timelike", "poly:0,2,0.1")
    print("timelike L1 N, first component (R term)")
    for s in (0.6, 1.0, 1.5, 2.5):
        p = SurfPoint(s, 0.0, 0.0)
        _, f1, f2, f3 = check_point(surf, p)
        b = lk_gauss_closed(surf, p, 1)
        ref = lk_gauss_generic(surf, p, 1)[0]
        printed = b.prefactor * r1_time_printed(s, f1, f2, f3)
        print(f"  s={s:<4} generic={ref: .10e}  corrected={b.result[0]: .10e}  as printed={printed: .10e}")


def firstkind_branches():
    print("first-kind theorem m, per branch (relative gap to the computed m)")
    for fam, params in (("firstkind-s", (1.0, 0.5, 0.0)), ("firstkind-t", (2.0, 0.5, 0.0))):
        for sign in (1, -1):
            surf = RotSurface(family_profile(fam, params, sign).axis, family_profile(fam, params, sign))
            lo, hi = surf.profile.default_range()
            out = firstkind_check(surf, SurfPoint(0.5 * (lo + hi), 0.2, 0.1))
            print(f"  {surf.profile.spec:<24} m={out['m']: .8e}  theorem={out['m_theorem']: .8e}"
                  f"  gap={out['m_rel_gap']:.2e}  |n|={abs(out['n']):.1e}")


def main():
    timelike_r1()
    firstkind_branches()


if __name__ == "__main__":
    main()
