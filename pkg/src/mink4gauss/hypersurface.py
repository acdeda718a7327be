"""Rotational hypersurfaces of E^4_1 about spacelike, timelike and lightlike axes."""

from dataclasses import dataclass
from enum import Enum
import math

import numpy as np

from . import jet as J
from .errors import DomainError, SingularFrame
from .jet import Jet
from .minkowski import MinkVec4, mink_dot
from .profiles import FAMILY_AXIS, Profile, derivative_jets, parse_profile

DELTA_DOM = 1e-6
FRAME_COND_MAX = 1e12


class AxisKind(str, Enum):
    SPACELIKE = "spacelike"
    TIMELIKE = "timelike"
    LIGHTLIKE = "lightlike"

    @classmethod
    def parse(cls, text):
        if isinstance(text, cls):
            return text
        key = str(text).strip().lower()
        aliases = {"s": "spacelike", "t": "timelike", "l": "lightlike"}
        try:
            return cls(aliases.get(key, key))
        except ValueError:
            raise DomainError(f"unknown axis kind {text!r}") from None


@dataclass(frozen=True)
class SurfPoint:
    s: float
    t: float = 0.0
    w: float = 0.0

    @classmethod
    def parse(cls, text):
        parts = [float(x) for x in text.split(",")]
        if len(parts) == 1:
            parts += [0.0, 0.0]
        if len(parts) != 3:
            raise DomainError(f"point {text!r} needs s,t,w")
        return cls(*parts)

    def tolist(self):
        return [self.s, self.t, self.w]


@dataclass(frozen=True)
class CurvatureData:
    kappa1: float
    kappa2: float
    kappa3: float
    g11: float
    g22: float
    g33: float

    @property
    def kappas(self):
        return (self.kappa1, self.kappa2, self.kappa3)


@dataclass(frozen=True)
class RotSurface:
    """Axis kind plus profile; immutable."""

    axis: AxisKind
    profile: Profile

    def __post_init__(self):
        axis = AxisKind.parse(self.axis)
        object.__setattr__(self, "axis", axis)
        profile = self.profile
        if isinstance(profile, str):
            profile = parse_profile(profile)
            object.__setattr__(self, "profile", profile)
        tag = FAMILY_AXIS[profile.family]
        if tag is not None and tag != axis.value:
            raise DomainError(
                f"profile family {profile.family} belongs to the {tag} axis, not {axis.value}"
            )

    @classmethod
    def from_spec(cls, axis, profile):
        return cls(AxisKind.parse(axis), parse_profile(profile) if isinstance(profile, str) else profile)


# ---------------------------------------------------------------------------
# guards


def profile_values(surface, s):
    """``(f, f', f'', f''')`` at ``s`` after all axis guards pass."""
    vals = surface.profile.derivatives(s)
    _guard_profile(surface.axis, s, vals[0], vals[1])
    return vals


def _guard_profile(axis, s, f, fp):
    if axis is AxisKind.TIMELIKE:
        if not fp * fp - 1.0 > DELTA_DOM:
            raise DomainError(f"timelike axis needs f'^2 - 1 > {DELTA_DOM} (f'={fp} at s={s})")
    elif not 1.0 - fp * fp > DELTA_DOM:
        raise DomainError(f"{axis.value} axis needs 1 - f'^2 > {DELTA_DOM} (f'={fp} at s={s})")
    if axis is AxisKind.LIGHTLIKE:
        if not abs(s - f) > DELTA_DOM:
            raise DomainError(f"lightlike axis needs |s - f| > {DELTA_DOM} (s={s}, f={f})")
    elif not abs(s) > DELTA_DOM:
        raise DomainError(f"{axis.value} axis needs |s| > {DELTA_DOM}")


def check_point(surface, p):
    vals = profile_values(surface, p.s)
    if surface.axis is AxisKind.TIMELIKE and not abs(math.cos(p.t)) > DELTA_DOM:
        raise DomainError("timelike axis needs cos t away from zero (g33 = s^2 cos^2 t)")
    return vals


# ---------------------------------------------------------------------------
# jet-level formulas (work for floats and Jets alike)


def _embedding(axis, s, t, w, f):
    if axis is AxisKind.SPACELIKE:
        ct = J.cosh(t)
        return (s * ct * J.cosh(w), s * J.sinh(t), s * ct * J.sinh(w), f)
    if axis is AxisKind.TIMELIKE:
        ct = J.cos(t)
        return (f, -s * ct * J.sin(w), -s * J.sin(t), s * ct * J.cos(w))
    r = 0.5 * (t * t + w * w)
    return ((r + 1.0) * s - r * f, r * s + (1.0 - r) * f, (s - f) * t, (s - f) * w)


def _normal(axis, t, w, fp):
    if axis is AxisKind.SPACELIKE:
        k = -1.0 / J.sqrt(1.0 - fp * fp)
        ct = J.cosh(t)
        return (k * fp * ct * J.cosh(w), k * fp * J.sinh(t), k * fp * ct * J.sinh(w), k * 1.0 + 0.0 * fp)
    if axis is AxisKind.TIMELIKE:
        k = 1.0 / J.sqrt(fp * fp - 1.0)
        ct = J.cos(t)
        return (k, -k * fp * ct * J.sin(w), -k * fp * J.sin(t), k * fp * ct * J.cos(w))
    k = 0.5 / J.sqrt(1.0 - fp * fp)
    r = t * t + w * w
    return (
        k * (r - (r + 2.0) * fp),
        k * (r - 2.0 - r * fp),
        k * 2.0 * t * (1.0 - fp),
        k * 2.0 * w * (1.0 - fp),
    )


def frame_jets(surface, p):
    """Jets of the embedding and Gauss map components at ``p`` (seeded in s, t, w)."""
    check_point(surface, p)
    F0, F1, _ = derivative_jets(surface.profile, p.s)
    S, T, W = Jet.var("s", p.s), Jet.var("t", p.t), Jet.var("w", p.w)
    gamma = _embedding(surface.axis, S, T, W, F0)
    normal = _normal(surface.axis, T, W, F1)
    return gamma, normal


# ---------------------------------------------------------------------------
# public operations


def embed(surface, p):
    f = check_point(surface, p)[0]
    return MinkVec4(*_embedding(surface.axis, p.s, p.t, p.w, f))


def gauss_map(surface, p):
    fp = check_point(surface, p)[1]
    return MinkVec4(*_normal(surface.axis, p.t, p.w, fp))


def metric(surface, p):
    """Diagonal first fundamental form ``(g11, g22, g33)`` from the closed forms."""
    f, fp = check_point(surface, p)[:2]
    s = p.s
    if surface.axis is AxisKind.SPACELIKE:
        return (fp * fp - 1.0, s * s, s * s * math.cosh(p.t) ** 2)
    if surface.axis is AxisKind.TIMELIKE:
        return (1.0 - fp * fp, s * s, s * s * math.cos(p.t) ** 2)
    u2 = (s - f) ** 2
    return (fp * fp - 1.0, u2, u2)


def gram_matrix(surface, p):
    """Full 3x3 Gram matrix of the embedding partials."""
    gamma, _ = frame_jets(surface, p)
    return _gram(gamma)


def _gram(gamma):
    parts = [np.array([g.gradient()[i] for g in gamma]) for i in range(3)]
    return np.array([[mink_dot(parts[i], parts[j]) for j in range(3)] for i in range(3)])


def _curvature_formulas(axis, s, f, fp, fpp):
    if axis is AxisKind.SPACELIKE:
        q = 1.0 - fp * fp
        return fpp / J.power(q, 1.5), fp / (s * J.sqrt(q))
    if axis is AxisKind.TIMELIKE:
        q = fp * fp - 1.0
        return fpp / J.power(q, 1.5), -fp / (s * J.sqrt(q))
    q = 1.0 - fp * fp
    return fpp / J.power(q, 1.5), (fp - 1.0) / ((s - f) * J.sqrt(q))


def principal_curvatures(surface, s):
    f, fp, fpp, _ = profile_values(surface, s)
    k1, k2 = _curvature_formulas(surface.axis, s, f, fp, fpp)
    g = metric(surface, SurfPoint(s, 0.0, 0.0))
    return CurvatureData(k1, k2, k2, *g)


def curvature_jets(surface, s):
    """``(kappa1, kappa2)`` as jets in ``s`` (kappa3 == kappa2)."""
    profile_values(surface, s)
    F0, F1, F2 = derivative_jets(surface.profile, s)
    return _curvature_formulas(surface.axis, Jet.var("s", s), F0, F1, F2)


def shape_operator_from_jets(gamma, normal):
    """S[m, i] = -g^{mj} <d_i N, d_j Gamma>, plus the Gram matrix used."""
    g = _gram(gamma)
    cond = np.linalg.cond(g)
    if not np.isfinite(cond) or cond > FRAME_COND_MAX:
        raise SingularFrame(f"coordinate frame Gram matrix has condition {cond:.3g}")
    dg = [np.array([x.gradient()[i] for x in gamma]) for i in range(3)]
    dn = [np.array([x.gradient()[i] for x in normal]) for i in range(3)]
    b = np.array([[mink_dot(dn[i], dg[j]) for j in range(3)] for i in range(3)])
    return -np.linalg.solve(g, b.T), g


def shape_operator_numeric(surface, p):
    """Shape operator -dN o dGamma^{-1} in the coordinate frame (3x3)."""
    gamma, normal = frame_jets(surface, p)
    return shape_operator_from_jets(gamma, normal)[0]


def shape_eigenvalues(S):
    """Sorted real eigenvalues of the (real-diagonalizable) shape operator."""
    return np.sort(np.linalg.eigvals(S).real)
