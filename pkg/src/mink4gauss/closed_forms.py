"""Expanded closed forms for a_k, grad a_k, L_1 N and L_2 N on the three families.

Notation inside the formulas: ``s`` the profile parameter, ``u = s - f``
(lightlike axis only), ``f1, f2, f3`` for f', f'', f'''; ``r = t^2 + w^2``.
"""

from dataclasses import dataclass, field
import math

from .errors import CaseMismatch, DomainError, UnsupportedK
from .hypersurface import AxisKind, check_point, profile_values
from .minkowski import MinkVec4


@dataclass(frozen=True)
class ClosedFormBreakdown:
    """Aggregates of one closed-form evaluation and the assembled vector."""

    result: MinkVec4
    prefactor: float
    P: float = math.nan
    Q: float = math.nan
    R: float = math.nan
    A: tuple = ()
    F: tuple = ()


# ---------------------------------------------------------------------------
# a_k


def ak_closed(axis, s, f, f1, f2):
    """Axis-specific closed forms of (a1, a2, a3)."""
    if axis is AxisKind.SPACELIKE:
        q = 1.0 - f1 * f1
        return (
            (2 * f1 * (f1**2 - 1) - s * f2) / (s * q**1.5),
            f1 * (2 * s * f2 + f1 * q) / (s**2 * q**2),
            -(f1**2) * f2 / (s**2 * q**2.5),
        )
    if axis is AxisKind.TIMELIKE:
        q = f1 * f1 - 1.0
        return (
            (2 * f1 * q - s * f2) / (s * q**1.5),
            f1 * (f1 * q - 2 * s * f2) / (s**2 * q**2),
            -(f1**2) * f2 / (s**2 * q**2.5),
        )
    u = s - f
    return (
        (2 * (f1 - 1) ** 2 * (f1 + 1) - u * f2) / ((1 - f1**2) ** 1.5 * u),
        (-((f1 - 1) ** 2) * (f1 + 1) + 2 * u * f2) / (u**2 * (f1 - 1) * (f1 + 1) ** 2),
        -f2 / (u**2 * math.sqrt(1 - f1) * (f1 + 1) ** 2.5),
    )


# ---------------------------------------------------------------------------
# shared polynomial aggregates


def _p1_space(s, f1, f2, f3):
    # printed as f'(s^2(f'^2-1)f''' + ((f'^2-1)^2 - 3s^2f''^2))f' - s^2f''^2; the
    # trailing f' belongs inside the bracket, i.e.
    #   f'( s^2(f'^2-1)f''' + ((f'^2-1)^2 - 3s^2f''^2) f' ) - s^2 f''^2
    return f1 * (s**2 * (f1**2 - 1) * f3 + ((f1**2 - 1) ** 2 - 3 * s**2 * f2**2) * f1) - s**2 * f2**2


def _p1_time(s, f1, f2, f3):
    return -(s**2) * f2**2 + (((f1**2 - 1) ** 2 - 3 * s**2 * f2**2) * f1 + s**2 * (f1**2 - 1) * f3) * f1


def _p2(s, f1, f2, f3):
    # P_2 is printed identically for the spacelike and timelike axes (and equals A_5)
    return f1 * ((2 * f1 * (f1**2 - 1) + s * (3 * f1**2 + 2) * f2) * f2 - s * (f1**2 - 1) * f1 * f3)


def _p1_light(u, f1, f2, f3):
    return (
        u**2 * f2**2
        + f1 * (2 * (1 - f1**2 * (2 - f1**2)) + f1 * (1 + f1**2) - 3 * u**2 * f2**2 - f1**5)
        + u**2 * (f1**2 - 1) * f3
        - 1
    )


def _p2_light(u, f1, f2, f3):
    return u * (f1**2 - 1) * f3 + 2 * (f1 + 1) * (f1 - 1) ** 2 * f2 - u * (3 * f1 - 2) * f2**2


def _q1(s, f1, f2, f3):
    # identical for both non-null axes
    return (
        3 * (1 - f1**2) * f1**4
        + f1**8
        - s * f1**5 * f2
        + s**2 * f2**2
        + (4 * s**2 * f2**2 - 1) * f1**2
        + s**2 * f1 * f3
        + s * (f2 - s * f3) * f1**3
    )


def _r1_space(s, f1, f2, f3):
    return -s * f1 * (((f1**2 - 1) * f1 - s * (3 * f1**2 + 2) * f2) * f2 + s * (f1**2 - 1) * f1 * f3)


def r1_time_printed(s, f1, f2, f3):
    """R_1 for the timelike axis exactly as printed (missing one f'' factor)."""
    return s * f1 * ((f1 * (f1**2 - 1) - s * (3 * f1**2 + 2)) * f2 + s * (f1**2 - 1) * f1 * f3)


def _r1_time(s, f1, f2, f3):
    # printed: s f'((f'(f'^2-1) - s(3f'^2+2)) f'' + ...); the s(3f'^2+2) term
    # carries f'' as in R_1 (spacelike) and the sinif2time numerator:
    #   s f'((f'(f'^2-1) - s(3f'^2+2)f'') f'' + s(f'^2-1) f' f''')
    return s * f1 * ((f1 * (f1**2 - 1) - s * (3 * f1**2 + 2) * f2) * f2 + s * (f1**2 - 1) * f1 * f3)


def _q1_light(u, f1, f2, f3):
    return (f1 - 1) ** 4 * (f1 + 1) ** 2 - u * ((f1 - 1) ** 2 * (f1 + 1) * f2 - u * f2**2)


def _r1_light(u, f1, f2, f3):
    return (f1 - 1) ** 2 * (f1 + 1) * f2 + u * ((3 * f1 - 2) * f2**2 - (f1**2 - 1) * f3)


def _q2_space(s, f1, f2, f3):
    return f1 * (2 * (-f1 * (f1**2 - 1) ** 2 + s * (2 * f1**2 + 1) * f2) * f2 - s * (f1**2 - 1) * f1 * f3)


def _r2_space(s, f1, f2, f3):
    return s * f1**2 * (3 * (f1**2 + 1) * f2**2 - (f1**2 - 1) * f1 * f3)


def _q2_time(s, f1, f2, f3):
    return f1 * (2 * (s * (2 * f1**2 + 1) * f2 - f1 * (f1**2 - 1) ** 2) * f2 - s * (f1**2 - 1) * f1 * f3)


def _r2_time(s, f1, f2, f3):
    return s * f1**2 * ((f1**2 - 1) * f1 * f3 - 3 * (f1**2 + 1) * f2**2)


# angular direction vectors of each family
def _dir_space(t, w, last):
    return (math.cosh(t) * math.cosh(w), math.sinh(t), math.cosh(t) * math.sinh(w), last)


def _dir_time(t, w):
    return (math.cos(t) * math.sin(w), math.sin(t), math.cos(t) * math.cos(w))


def _light_vec(t, w, f1):
    r = t * t + w * w
    return ((r * f1 - r - 2), ((r - 2) * f1 - r), 2 * t * (f1 - 1), 2 * w * (f1 - 1))


def _scaled(prefactor, comps):
    return MinkVec4(*(prefactor * c for c in comps))


# ---------------------------------------------------------------------------
# gradients of a_2 and a_3


def grad_ak_closed(surface, p, k):
    """Closed-form grad a_k (k in {2, 3}) pushed forward into E^4_1."""
    if k not in (2, 3):
        raise UnsupportedK(f"grad_ak_closed supports k in {{2, 3}}, got {k}")
    f, f1, f2, f3 = check_point(surface, p)
    s, t, w = p.s, p.t, p.w
    axis = surface.axis
    if axis is AxisKind.SPACELIKE:
        v = _dir_space(t, w, f1)
        if k == 2:
            return _scaled(2 * _p1_space(s, f1, f2, f3) / (s**3 * (f1**2 - 1) ** 4), v)
        return _scaled(_p2(s, f1, f2, f3) / (s**3 * (1 - f1**2) ** 4.5), v)
    if axis is AxisKind.TIMELIKE:
        cs, st, cc = _dir_time(t, w)
        if k == 2:
            return _scaled(2 * _p1_time(s, f1, f2, f3) / (s**3 * (f1**2 - 1) ** 4), (f1, -cs, -st, cc))
        return _scaled(_p2(s, f1, f2, f3) / (s**3 * (f1**2 - 1) ** 4.5), (-f1, cs, st, -cc))
    u = s - f
    v = _light_vec(t, w, f1)
    if k == 2:
        pre = -_p1_light(u, f1, f2, f3) * (f1 + 1) ** -4 / (u**3 * (f1 - 1) ** 3)
        return _scaled(pre, v)
    pre = _p2_light(u, f1, f2, f3) * (f1 + 1) ** -4.5 / (2 * u**3 * (1 - f1) ** 2.5)
    return _scaled(pre, v)


# ---------------------------------------------------------------------------
# L_1 N and L_2 N


def lk_gauss_closed(surface, p, k):
    """Evaluate the expanded L_k N formula of the surface's axis."""
    if k not in (1, 2):
        raise UnsupportedK(f"closed forms exist for k in {{1, 2}}, got {k}")
    f, f1, f2, f3 = check_point(surface, p)
    return lk_closed_formula(surface.axis, k, p.s, p.t, p.w, f, f1, f2, f3)


def lk_closed_formula(axis, k, s, t, w, f, f1, f2, f3):
    """The bare L_k N formula on raw values, without any domain guard.

    Meaningful only where the expression itself is real and finite; the
    guarded entry point is :func:`lk_gauss_closed`.
    """
    axis = AxisKind.parse(axis)
    if axis is AxisKind.SPACELIKE:
        ch, cw, sh, sw = math.cosh(t), math.cosh(w), math.sinh(t), math.sinh(w)
        if k == 1:
            Q, R = _q1(s, f1, f2, f3), _r1_space(s, f1, f2, f3)
            pre = -2 / (s**3 * (f1**2 - 1) ** 4)
            P = _p1_space(s, f1, f2, f3)
        else:
            Q, R = _q2_space(s, f1, f2, f3), _r2_space(s, f1, f2, f3)
            pre = 1 / (s**3 * (1 - f1**2) ** 4.5)
            P = _p2(s, f1, f2, f3)
        comps = (ch * cw * Q, sh * Q, ch * sw * Q, R)
        return ClosedFormBreakdown(_scaled(pre, comps), pre, P=P, Q=Q, R=R)
    if axis is AxisKind.TIMELIKE:
        cs, st, cc = _dir_time(t, w)
        if k == 1:
            Q, R = _q1(s, f1, f2, f3), _r1_time(s, f1, f2, f3)
            pre = 2 / (s**3 * (f1**2 - 1) ** 4)
            P = _p1_time(s, f1, f2, f3)
        else:
            Q, R = _q2_time(s, f1, f2, f3), _r2_time(s, f1, f2, f3)
            pre = 1 / (s**3 * (f1**2 - 1) ** 4.5)
            P = _p2(s, f1, f2, f3)
        comps = (R, cs * Q, st * Q, -cc * Q)
        return ClosedFormBreakdown(_scaled(pre, comps), pre, P=P, Q=Q, R=R)
    u = s - f
    r = t * t + w * w
    if k == 1:
        P = _p1_light(u, f1, f2, f3)
        Q = _q1_light(u, f1, f2, f3)
        R = _r1_light(u, f1, f2, f3)
        pre = -((f1 + 1) ** -4) / (u**3 * (f1 - 1) ** 3)
        comps = (
            r * (f1 * P - Q) + (2 + r) * (f1 * Q - P),
            r * (f1 * Q - P) + (2 - r) * (Q - f1 * P),
            -2 * t * u * (f1 - 1) * R,
            -2 * w * u * (f1 - 1) * R,
        )
        return ClosedFormBreakdown(_scaled(pre, comps), pre, P=P, Q=Q, R=R)
    F1 = (
        (f1**2 - 1) * (r * f1 - r - 2) * f3
        - (3 * r * f1**2 - (3 * r + 4) * (2 * f1 - 1)) * f2**2
        - 4 * (f1**2 - 1) ** 2 * f2 / u
    )
    F2 = (
        (f1**2 - 1) * ((r - 2) * f1 - r) * f3
        - (3 * (r - 2) * f1**2 - (3 * r - 2) * (2 * f1 - 1)) * f2**2
        - 4 * (f1**2 - 1) ** 2 * f2 / u
    )
    F3 = (1 - f1) ** 2 * ((f1 + 1) * f3 - 3 * f2**2)
    # prefactor transcribed as printed, no simplification
    pre = (f1 + 1) ** -4.5 / (2 * u**2 * (1 - f1) ** 2.5)
    comps = (F1, F2, 2 * t * F3, 2 * w * F3)
    return ClosedFormBreakdown(_scaled(pre, comps), pre, P=_p2_light(u, f1, f2, f3), F=(F1, F2, F3))


# ---------------------------------------------------------------------------
# flat / minimal specializations

FLAT_FAMILIES = {"flat-s": AxisKind.SPACELIKE, "flat-t": AxisKind.TIMELIKE, "flat-l": AxisKind.LIGHTLIKE}
MINIMAL_FAMILIES = {
    "minimal-s": AxisKind.SPACELIKE,
    "minimal-t": AxisKind.TIMELIKE,
    "minimal-l": AxisKind.LIGHTLIKE,
}


def _require_case(surface, case):
    table = {"flat": FLAT_FAMILIES, "minimal": MINIMAL_FAMILIES}.get(case)
    if table is None:
        raise CaseMismatch(f"case must be 'flat' or 'minimal', got {case!r}")
    family = surface.profile.family
    if table.get(family) is not surface.axis:
        raise CaseMismatch(
            f"{surface.axis.value} surface with profile {family} is not the {case} family"
        )


def special_case_closed(surface, p, case, k):
    """Specialized L_k N for flat or minimal profiles (A-polynomial form)."""
    if k not in (1, 2):
        raise UnsupportedK(f"k must be 1 or 2, got {k}")
    _require_case(surface, case)
    f, f1, f2, f3 = check_point(surface, p)
    s, t, w = p.s, p.t, p.w
    axis = surface.axis
    if k == 2 and case == "flat":
        return MinkVec4.zero()
    if axis is AxisKind.SPACELIKE:
        ch, cw, sh, sw = math.cosh(t), math.cosh(w), math.sinh(t), math.sinh(w)
        if k == 2:
            A5 = _p2(s, f1, f2, f3)
            return _scaled(A5 / (s**3 * (1 - f1**2) ** 4.5), (ch * cw, sh, ch * sw, f1))
        if case == "flat":
            A1 = (
                6 * (1 - f1**2) * f1**4 + 2 * f1**8 - 5 * s * f1**5 * f2 + 2 * s**2 * f2**2
                + (8 * s**2 * f2**2 - 2) * f1**2 + 2 * s**2 * f1 * f3 + s * (5 * f2 - 2 * s * f3) * f1**3
            )
            A2 = -s * (2 * s * (f1**2 - 1) * f1 * f3 + (5 * (f1**2 - 1) * f1 - 2 * s * (3 * f1**2 + 2) * f2) * f2) * f1
            pre = -1 / (s**3 * (f1**2 - 1) ** 4)
            return _scaled(pre, (ch * cw * A1, sh * A1, ch * sw * A1, A2))
        A3 = (
            -3 * s * (f1**2 - 1) * f1**3 * f2 - 2 * s**2 * f2**2
            + 2 * (((f1**2 - 1) ** 2 - 3 * s**2 * f2**2) * f1 + s**2 * (f1**2 - 1) * f3) * f1
        )
        A4 = (
            -2 * (2 - f1**2) * f1**4 - 2 * s**2 * f2**2 + (2 - 6 * s**2 * f2**2) * f1**2
            + s * (3 * f2 - 2 * s * f3) * f1 + s * (2 * s * f3 - 3 * f2) * f1**3
        ) * f1
        pre = 1 / (s**3 * (f1**2 - 1) ** 4)
        return _scaled(pre, (ch * cw * A3, sh * A3, ch * sw * A3, A4))
    if axis is AxisKind.TIMELIKE:
        cs, st, cc = _dir_time(t, w)
        if k == 2:
            A5 = f1 * (f2 * (2 * f1 * (f1**2 - 1) + s * (3 * f1**2 + 2) * f2) - s * (f1**2 - 1) * f1 * f3)
            return _scaled(A5 / (s**3 * (f1**2 - 1) ** 4.5), (-f1, cs, st, -cc))
        pre = 1 / (s**3 * (f1**2 - 1) ** 4)
        if case == "flat":
            A1 = (
                6 * f1**4 * (1 - f1**2) + 2 * f1**8 - 5 * s * f1**5 * f2 + 2 * s**2 * f2**2
                + (8 * s**2 * f2**2 - 2) * f1**2 + 2 * s**2 * f1 * f3 + s * f1**3 * (5 * f2 - 2 * s * f3)
            )
            A2 = s * f1 * ((5 * f1 * (f1**2 - 1) - 2 * s * (3 * f1**2 + 2) * f2) * f2 + 2 * s * (f1**2 - 1) * f1 * f3)
            return _scaled(pre, (A2, cs * A1, st * A1, -cc * A1))
        A3 = (
            3 * s * (f1**2 - 1) * f1**3 * f2 + 2 * s**2 * f2**2
            - 2 * (f1 * ((f1**2 - 1) ** 2 - 3 * s**2 * f2**2) + s**2 * (f1**2 - 1) * f3) * f1
        )
        A4 = f1 * (
            -2 * f1**4 * (2 - f1**2) - 2 * s**2 * f2**2 + (2 - 6 * s**2 * f2**2) * f1**2
            + (3 * f2 - 2 * s * f3) * s * f1 * (1 - f1**2)
        )
        return _scaled(pre, (A4, cs * A3, st * A3, -cc * A3))
    u = s - f
    r = t * t + w * w
    if k == 2:
        A5 = u * ((f1**2 - 1) * f3 - (3 * f1 - 2) * f2**2) + 2 * (f1 + 1) * (f1 - 1) ** 2 * f2
        pre = A5 * (f1 + 1) ** -4.5 / (2 * u**3 * (1 - f1) ** 2.5)
        return _scaled(pre, (r * f1 - r - 2, (r - 2) * f1 - r, -2 * t * (1 - f1), -2 * w * (1 - f1)))
    pre = -((f1 + 1) ** -4) / (2 * u**3 * (f1 - 1) ** 3)
    if case == "flat":
        P1 = _p1_light(u, f1, f2, f3)
        A1 = (u * f2 - 2 * (f1 - 1) ** 2 * (f1 + 1)) * (2 * u * f2 - (f1 - 1) ** 2 * (f1 + 1))
        A2 = 5 * (f1 + 1) * (f1 - 1) ** 2 * f2 - 2 * u * (f1**2 - 1) * f3 + 2 * u * (3 * f1 - 2) * f2**2
        comps = (
            (r + 2) * (f1 * A1 - 2 * P1) - r * (A1 - 2 * f1 * P1),
            (r - 2) * (2 * f1 * P1 - A1) + r * (f1 * A1 - 2 * P1),
            2 * t * u * (1 - f1) * A2,
            2 * w * u * (1 - f1) * A2,
        )
        return _scaled(pre, comps)
    # sign placement "-f'A4 - 2A3" kept verbatim
    A3 = u**2 * (f2**2 * (1 - 3 * f1) + (f1**2 - 1) * f3) + f1 * (f1**3 * (1 - f1**2) - 2 * f1**2 * (2 - f1**2) + f1 + 2) - 1
    A4 = -3 * u * (f1 - 1) ** 2 * (f1 + 1) * f2
    comps = (
        (r + 2) * (-f1 * A4 - 2 * A3) + r * (A4 + 2 * f1 * A3),
        (r - 2) * (2 * f1 * A3 + A4) - r * (2 * A3 + f1 * A4),
        2 * t * (1 - f1) * (A4 - 2 * A3),
        2 * w * (1 - f1) * (A4 - 2 * A3),
    )
    return _scaled(pre, comps)


def corollary_closed(surface, p, k):
    """Fully reduced L_k N for the flat/minimal families, in terms of their constants."""
    family = surface.profile.family
    if family in FLAT_FAMILIES:
        _require_case(surface, "flat")
    else:
        _require_case(surface, "minimal")
    check_point(surface, p)
    c = surface.profile.params
    s, t, w = p.s, p.t, p.w
    if k == 2 and family in FLAT_FAMILIES:
        return MinkVec4.zero()
    if family == "flat-s" and k == 1:
        c23 = abs(c[0]) ** (2.0 / 3.0)
        return _scaled(2 * c23 / s**3, _dir_space(t, w, 0.0))
    if family == "minimal-s":
        c2 = c[0]
        root = math.sqrt(s**4 + c2**2)
        if k == 1:
            q = 3 * s**4 + 4 * c2**2
            ch, cw, sh, sw = math.cosh(t), math.cosh(w), math.sinh(t), math.sinh(w)
            return _scaled(-6 * c2**2 / s**11, (q * ch * cw, q * sh, q * ch * sw, 4 * c2 * root))
        q = (s**4 + c2**2) ** 1.5
        ch, cw, sh, sw = math.cosh(t), math.cosh(w), math.sinh(t), math.sinh(w)
        return _scaled(18 * c2**3 / (s**14 * root), (q * ch * cw, q * sh, q * ch * sw, c2 * (s**4 + c2**2)))
    if family == "flat-t" and k == 1:
        c23 = abs(c[0]) ** (2.0 / 3.0)
        cs, st, cc = _dir_time(t, w)
        return _scaled(2 * c23 / s**3, (0.0, cs, st, -cc))
    if family == "minimal-t":
        c8 = c[0]
        cs, st, cc = _dir_time(t, w)
        if k == 1:
            q = -3 * s**4 + 4 * c8**2
            return _scaled(
                6 * c8**2 / s**11,
                (-4 * c8 * math.sqrt(c8**2 - s**4), q * cs, q * st, -q * cc),
            )
        q = (c8**2 - s**4) ** 1.5
        return _scaled(
            18 * c8**3 / (s**14 * math.sqrt(c8**2 - s**4)),
            (c8 * (s**4 - c8**2), q * cs, q * st, -q * cc),
        )
    if family == "flat-l" and k == 1:
        c13, c14 = c
        pre = 1 / ((c13 + 1) * (c14 + (c13 - 1) * s) ** 3)
        return _scaled(pre, (2 * (c13 - 1), 2 * (c13 - 1), 0.0, 0.0))
    raise CaseMismatch(f"no reduced corollary for {family} with k={k}")


# ---------------------------------------------------------------------------
# first-kind theorem statements (compared, never trusted)


def firstkind_theorem(surface, p):
    """The printed (m, L_1 N) of the first-kind theorems for the integral families."""
    family = surface.profile.family
    if family not in ("firstkind-s", "firstkind-t"):
        raise CaseMismatch(f"{family} is not a first-kind family")
    check_point(surface, p)
    c, d = surface.profile.params[:2]
    s, t, w = p.s, p.t, p.w
    poly = 1 + 12 * d * s**3 * (1 + 12 * d * s**3)
    if family == "firstkind-s":
        m = -(c**2) * math.sqrt(2) * poly / (s**4.5 * math.sqrt(3 * c * (1 + 6 * d * s**3)))
        pre = 2 * poly / (-3 * c**-2 * s**5)
        last = math.sqrt(12 * c * d * s**3 + 3 * s + 2 * c) / (-math.sqrt(2 * c * (1 + 6 * d * s**3)))
        vec = _scaled(pre, _dir_space(t, w, last))
        return m, vec
    m = c**2 * math.sqrt(2) * poly / ((-s) ** 4.5 * math.sqrt(3 * c * (1 + 6 * d * s**3)))
    pre = 2 * c**2 * poly / (3 * s**5)
    first = math.sqrt(6 * s + 4 * c + 24 * c * d * s**3) / (2 * math.sqrt(c * (1 + 6 * d * s**3)))
    cs, st, cc = _dir_time(t, w)
    return m, _scaled(pre, (first, cs, st, -cc))
