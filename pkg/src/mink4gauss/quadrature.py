"""Adaptive Simpson quadrature with a Richardson-corrected error estimate."""

from .errors import QuadNonConvergence

MAX_PANELS = 2**20
_MIN_DEPTH = 4


def _simpson(fa, fm, fb, h):
    return h / 6.0 * (fa + 4.0 * fm + fb)


def quad(integrand, a, b, tol=1e-10, max_panels=MAX_PANELS):
    """Integrate ``integrand`` over ``[a, b]``.

    The target is ``|result - I| <= tol * (1 + |result|)``.  Each accepted
    panel adds the Boole-rule (Richardson) correction, so polynomials up
    to degree 5 are integrated exactly.

    Raises :class:`QuadNonConvergence` with the best estimate when more
    than ``max_panels`` panels would be needed.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    if a == b:
        return 0.0
    if a > b:
        return -quad(integrand, b, a, tol, max_panels)

    fa, fb = integrand(a), integrand(b)
    m = 0.5 * (a + b)
    fm = integrand(m)
    whole = _simpson(fa, fm, fb, b - a)
    eps = tol * (1.0 + abs(whole))

    total = 0.0
    err_total = 0.0
    panels = 1
    # (a, b, fa, fm, fb, whole, eps, depth)
    stack = [(a, b, fa, fm, fb, whole, eps, 0)]
    while stack:
        lo, hi, flo, fmid, fhi, s_whole, e_loc, depth = stack.pop()
        mid = 0.5 * (lo + hi)
        lm, rm = 0.5 * (lo + mid), 0.5 * (mid + hi)
        flm, frm = integrand(lm), integrand(rm)
        left = _simpson(flo, flm, fmid, mid - lo)
        right = _simpson(fmid, frm, fhi, hi - mid)
        diff = left + right - s_whole
        if depth >= _MIN_DEPTH and abs(diff) <= 15.0 * e_loc:
            total += left + right + diff / 15.0
            err_total += abs(diff) / 15.0
            continue
        panels += 1
        if panels > max_panels:
            best = total + left + right + sum(item[5] for item in stack)
            raise QuadNonConvergence(
                f"quadrature on [{a}, {b}] exceeded {max_panels} panels",
                estimate=best,
                error_bound=err_total + abs(diff),
            )
        stack.append((mid, hi, fmid, frm, fhi, right, 0.5 * e_loc, depth + 1))
        stack.append((lo, mid, flo, flm, fmid, left, 0.5 * e_loc, depth + 1))
    return total
