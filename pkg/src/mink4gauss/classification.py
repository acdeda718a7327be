"""Gauss-map type tests: (m, n, C) decomposition, ODE residuals and verdicts.

The four types, for a non-zero constant vector C and functions m, n:

* harmonic       L_k N = 0
* first kind     L_k N = m N
* second kind    L_k N = m (N + C)
* generalized    L_k N = m N + n C
"""

from dataclasses import dataclass, field
from enum import Enum
import math

import numpy as np

from .closed_forms import firstkind_theorem
from .errors import CaseMismatch, IndeterminateDecomposition, InsufficientSamples, UnsupportedK
from .hypersurface import AxisKind, RotSurface, SurfPoint, check_point, gauss_map, profile_values
from .lk_operator import lk_gauss_generic
from .minkowski import MinkVec4
from .profiles import family_profile  # noqa: F401  (re-exported)

DEFAULT_TOL = 1e-7
DEGENERATE_EPS = 1e-12
MIN_SAMPLES = 8
TW_PAIRS = ((0.0, 0.0), (0.35, -0.2), (-0.5, 0.45))

# constant direction per axis, first non-zero component normalized to 1
C_DIRECTION = {
    AxisKind.SPACELIKE: MinkVec4(0.0, 0.0, 0.0, 1.0),
    AxisKind.TIMELIKE: MinkVec4(1.0, 0.0, 0.0, 0.0),
    AxisKind.LIGHTLIKE: MinkVec4(1.0, 1.0, 0.0, 0.0),
}


class Kind(str, Enum):
    HARMONIC = "Harmonic"
    FIRST_KIND = "FirstKind"
    SECOND_KIND = "SecondKind"
    GENERALIZED = "Generalized"
    NONE = "None"


@dataclass(frozen=True)
class Decomposition:
    """L_k N = m N + n C at one point.

    ``m_printed`` / ``n_printed`` hold the explicit formulas for the non-null
    axes (NaN on the lightlike axis, which has none).
    """

    m: float
    n: float
    C: MinkVec4
    residual: float
    lkN: MinkVec4
    m_printed: float = math.nan
    n_printed: float = math.nan

    @property
    def printed_agreement(self):
        """Gaps (m, n) to the explicit formulas; NaN when none exist.

        m is compared relatively; n, which vanishes on first-kind profiles,
        against 1 + |L_k N|.
        """
        if not math.isfinite(self.m_printed):
            return math.nan, math.nan
        gm = abs(self.m - self.m_printed) / max(abs(self.m), abs(self.m_printed), 1e-300)
        gn = abs(self.n - self.n_printed) / (1.0 + self.lkN.norm())
        return gm, gn


@dataclass(frozen=True)
class SampleEvidence:
    point: SurfPoint
    norm: float
    m: float
    n: float
    residual: float


@dataclass(frozen=True)
class Verdict:
    kind: Kind
    k: int
    evidence: tuple
    C: MinkVec4
    tol: float
    margins: dict = field(default_factory=dict)
    ratio: float = math.nan  # n/m, the C scale for second kind


# ---------------------------------------------------------------------------
# explicit m, n and ODE left-hand sides for the non-null axes


def printed_m_n(axis, k, s, f1, f2, f3):
    """Explicit (m, n*C_dist) for L_k N = m N + n C; C_dist is C's axis component."""
    q = f1 * f1 - 1.0
    if axis is AxisKind.SPACELIKE and k == 1:
        m = -(
            -2 * q**3 * f1**2 + 2 * s * q * f1**3 * f2 - 2 * s**2 * ((4 * f1**2 + 1) * f2**2 - q * f1 * f3)
        ) / (s**3 * f1 * (-q) ** 3.5)
        nc = (2 * (s**2 * f3 * q + f1 * (q**2 - 3 * s**2 * f2**2)) * f1 - 2 * s**2 * f2**2) / (s**3 * f1 * q**3)
        return m, nc
    if axis is AxisKind.TIMELIKE and k == 1:
        m = -2 * (
            3 * f1**4 * (1 - f1**2) + f1**8 - s * f1**5 * f2 + s**2 * f2**2
            + (4 * s**2 * f2**2 - 1) * f1**2 + s**2 * f1 * f3 + s * f1**3 * (f2 - s * f3)
        ) / (s**3 * f1 * q**3.5)
        nc = (2 * (f1 * (q**2 - 3 * s**2 * f2**2) + s**2 * q * f3) * f1 - 2 * s**2 * f2**2) / (s**3 * f1 * q**3)
        return m, nc
    if axis is AxisKind.SPACELIKE and k == 2:
        m = (2 * f2 * (f1 * q**2 - s * (2 * f1**2 + 1) * f2) + s * q * f1 * f3) / (s**3 * q**4)
        nc = -(f2 * (2 * f1 * q + s * (3 * f1**2 + 2) * f2) - s * q * f1 * f3) / (s**3 * (-q) ** 3.5)
        return m, nc
    if axis is AxisKind.TIMELIKE and k == 2:
        m = (2 * f2 * (f1 * q**2 - s * (2 * f1**2 + 1) * f2) + s * q * f1 * f3) / (s**3 * q**4)
        nc = (s * q * f1 * f3 - (2 * f1 * q + s * (3 * f1**2 + 2) * f2) * f2) / (s**3 * q**3.5)
        return m, nc
    raise CaseMismatch(f"no explicit m, n formulas for the {axis.value} axis")


def printed_m_c_zero(axis, k, s, f1, f2, f3):
    """The two m's obtained when C's axis component is zero (symmetric part, axis part).

    Their equality is the first-kind condition.
    """
    q = f1 * f1 - 1.0
    if k == 1:
        sym = (-2 * q**3 * f1**2 + 2 * s * q * f1**3 * f2 - 2 * s**2 * (4 * f1**2 + 1) * f2**2
               + 2 * s**2 * q * f1 * f3) / (s**3 * f1)
        ax = 2 * f1 * (s * q * f1 * f3 + (q * f1 - s * (3 * f1**2 + 2) * f2) * f2) / s**2
        if axis is AxisKind.SPACELIKE:
            return -sym / (-q) ** 3.5, -ax / (-q) ** 3.5
        if axis is AxisKind.TIMELIKE:
            return sym / q**3.5, ax / q**3.5
    elif k == 2:
        sym = (s * q * f1 * f3 + 2 * (f1 * q**2 - s * (2 * f1**2 + 1) * f2) * f2) / (s**3 * q**4)
        ax = f1**2 * (q * f1 * f3 - 3 * (f1**2 + 1) * f2**2) / (s**2 * q**4)
        if axis in (AxisKind.SPACELIKE, AxisKind.TIMELIKE):
            return sym, ax
    raise CaseMismatch(f"no C-zero formulas for the {axis.value} axis")


def firstkind_lhs(axis, k, s, f1, f2, f3):
    q = f1 * f1 - 1.0
    if k == 1:
        if axis is AxisKind.SPACELIKE:
            return f1 * (s**2 * q * f3 + (q**2 - 3 * s**2 * f2**2) * f1) - s**2 * f2**2
        return (f1 * (q**2 - 3 * s**2 * f2**2) + s**2 * q * f3) * f1 - s**2 * f2**2
    # same equation on both non-null axes
    return s * q * f1 * f3 - (2 * f1 * q + s * (3 * f1**2 + 2) * f2) * f2


def secondkind_lhs(axis, k, s, f1, f2, f3, c):
    """Left-hand side of the m = n condition, with C's axis component ``c``."""
    q = f1 * f1 - 1.0
    if axis is AxisKind.SPACELIKE and k == 1:
        return (c * math.sqrt(-q) - 1) * (
            2 * q**3 * f1**2 - 2 * s * q * f1**3 * f2 + 2 * s**2 * (4 * f1**2 + 1) * f2**2 - 2 * s**2 * q * f1 * f3
        ) - 2 * s * (s * q * f1 * f3 + (q * f1 - s * (3 * f1**2 + 2) * f2) * f2) * f1**2
    if axis is AxisKind.TIMELIKE and k == 1:
        # a stray "/" inside the first bracket is dropped
        return (1 + c * math.sqrt(q)) * (
            -2 * f1**2 * q**3 + 2 * s * q * f1**3 * f2 - 2 * s**2 * (4 * f1**2 + 1) * f2**2 + 2 * s**2 * q * f1 * f3
        ) - 2 * s * ((f1 * q - s * (3 * f1**2 + 2) * f2) * f2 + s * q * f1 * f3) * f1**2
    if axis is AxisKind.SPACELIKE and k == 2:
        return (c * math.sqrt(-q) - 1) * (
            s * q * f1 * f3 + 2 * f2 * (f1 * q**2 - s * (2 * f1**2 + 1) * f2)
        ) + s * f1**2 * (q * f1 * f3 - 3 * (f1**2 + 1) * f2**2)
    if axis is AxisKind.TIMELIKE and k == 2:
        return (1 + c * math.sqrt(q)) * (
            2 * (f1 * q**2 - s * (2 * f1**2 + 1) * f2) * f2 + s * q * f1 * f3
        ) - s * f1**2 * (q * f1 * f3 - 3 * (f1**2 + 1) * f2**2)
    raise CaseMismatch(f"no second-kind equation for the {axis.value} axis")


def secondkind_scale(k, s, f1):
    """Factor relating the second-kind left-hand side to C (m - n)."""
    q = abs(1.0 - f1 * f1)
    return s**3 * f1 * q**4 if k == 1 else s**3 * q**4.5


def ode_residual(surface, s, k, kind, c=None):
    """Residual of the first-kind ODE or the second-kind (m = n) equation at ``s``."""
    if k not in (1, 2):
        raise UnsupportedK(f"k must be 1 or 2, got {k}")
    axis = surface.axis
    if axis is AxisKind.LIGHTLIKE:
        raise CaseMismatch("no first/second-kind equations exist for the lightlike axis")
    _, f1, f2, f3 = profile_values(surface, s)
    if kind == "firstkind":
        return firstkind_lhs(axis, k, s, f1, f2, f3)
    if kind == "secondkind":
        if c is None:
            raise ValueError("secondkind residual needs the constant C component")
        return secondkind_lhs(axis, k, s, f1, f2, f3, float(c))
    raise ValueError(f"kind must be 'firstkind' or 'secondkind', got {kind!r}")


# ---------------------------------------------------------------------------
# decomposition


def _solve_m(axis, L, N):
    if axis is AxisKind.SPACELIKE:
        a, b = L[:3], N[:3]
    elif axis is AxisKind.TIMELIKE:
        a, b = L[1:], N[1:]
    else:
        return (L[0] - L[1]) / (N[0] - N[1])
    return float(a @ b / (b @ b))


def decompose(surface, p, k):
    """Split L_k N into m N + n C with C along the axis-fixed direction."""
    if k not in (1, 2):
        raise UnsupportedK(f"k must be 1 or 2, got {k}")
    _, f1, f2, f3 = check_point(surface, p)
    axis = surface.axis
    if k == 1 and axis is not AxisKind.LIGHTLIKE and abs(f1) <= DEGENERATE_EPS:
        raise IndeterminateDecomposition("f' = 0: the rotational components of N vanish (L_1 N = 0)")
    if k == 2 and abs(f2) <= DEGENERATE_EPS:
        raise IndeterminateDecomposition("f'' = 0: L_2 N vanishes identically")
    L_vec = lk_gauss_generic(surface, p, k)
    L = L_vec.as_array()
    N = gauss_map(surface, p).as_array()
    C = C_DIRECTION[axis]
    Ca = C.as_array()
    m = _solve_m(axis, L, N)
    d = int(np.argmax(np.abs(Ca)))
    n = float(L[d] - m * N[d])
    residual = float(np.linalg.norm(L - m * N - n * Ca))
    mp = np_ = math.nan
    if axis is not AxisKind.LIGHTLIKE:
        mp, np_ = printed_m_n(axis, k, p.s, f1, f2, f3)
    return Decomposition(m, n, C, residual, L_vec, mp, np_)


def firstkind_check(surface, p):
    """Compare computed m and L_1 N against the first-kind theorem's explicit statement."""
    m_thm, L_thm = firstkind_theorem(surface, p)
    d = decompose(surface, p, 1)
    L = d.lkN.as_array()
    Lt = L_thm.as_array()
    return {
        "m": d.m,
        "m_theorem": m_thm,
        "m_rel_gap": abs(d.m - m_thm) / max(abs(d.m), 1e-300),
        "n": d.n,
        "lkN": d.lkN.tolist(),
        "lkN_theorem": L_thm.tolist(),
        "lkN_component_signs_agree": [bool(np.sign(a) == np.sign(b)) for a, b in zip(L, Lt)],
        "lkN_abs_gap": float(np.max(np.abs(np.abs(L) - np.abs(Lt)))),
    }


# ---------------------------------------------------------------------------
# verdicts


def sample_plan(surface, n_s=MIN_SAMPLES, s_range=None):
    """``n_s`` log-spaced s values times the fixed (t, w) pairs."""
    lo, hi = s_range or surface.profile.default_range()
    sign = 1.0
    if hi <= 0:
        sign, lo, hi = -1.0, -hi, -lo
    lo = max(lo, 1e-3)
    ss = sign * np.geomspace(lo, hi, n_s)
    return [SurfPoint(float(s), t, w) for s in sorted(ss) for t, w in TW_PAIRS]


def classify(surface, samples=None, k=1, tol=DEFAULT_TOL):
    """Strongest Gauss-map type consistent with every sample (within tolerance).

    Tolerances scale as ``tol * (1 + |L_k N|)`` per sample.
    """
    if k not in (1, 2):
        raise UnsupportedK(f"k must be 1 or 2, got {k}")
    samples = sample_plan(surface) if samples is None else list(samples)
    if len({p.s for p in samples}) < MIN_SAMPLES:
        raise InsufficientSamples(f"need at least {MIN_SAMPLES} distinct s values, got {len({p.s for p in samples})}")
    C = C_DIRECTION[surface.axis]

    rows = []
    for p in samples:
        L = lk_gauss_generic(surface, p, k)
        norm = L.norm()
        try:
            d = decompose(surface, p, k)
            rows.append(SampleEvidence(p, norm, d.m, d.n, d.residual))
        except IndeterminateDecomposition:
            rows.append(SampleEvidence(p, norm, 0.0, 0.0, norm))
    evidence = tuple(rows)
    band = [tol * (1 + e.norm) for e in rows]

    worst_norm = max(e.norm for e in rows)
    margins = {"harmonic": float(worst_norm / tol)}
    if worst_norm <= tol:
        return Verdict(Kind.HARMONIC, k, evidence, C, tol, margins)

    gen_margin = float(max(e.residual / b for e, b in zip(rows, band)))
    fk_margin = float(max(math.hypot(e.residual, e.n) / b for e, b in zip(rows, band)))
    margins.update(generalized=gen_margin, firstkind=fk_margin)
    if fk_margin <= 1.0:
        return Verdict(Kind.FIRST_KIND, k, evidence, C, tol, margins)
    if gen_margin > 1.0:
        return Verdict(Kind.NONE, k, evidence, C, tol, margins)

    # second kind: n / m must be one constant over all samples
    usable = [e for e in rows if abs(e.m) > tol * (1 + e.norm)]
    ratio = math.nan
    if len({e.point.s for e in usable}) >= 2:
        ratios = np.array([e.n / e.m for e in usable])
        ratio = float(np.median(ratios))
        spread = float(max(abs(e.n - ratio * e.m) / (tol * (1 + e.norm)) for e in rows))
        margins["secondkind"] = spread
        if spread <= 1.0 and ratio != 0.0:
            return Verdict(Kind.SECOND_KIND, k, evidence, C, tol, margins, ratio)
    return Verdict(Kind.GENERALIZED, k, evidence, C, tol, margins, ratio)
