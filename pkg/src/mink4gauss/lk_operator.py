"""The operator L_k on the Gauss map, assembled two independent ways.

``lk_gauss_generic`` builds L_k N from the mean curvatures, their gradients and
N itself.  ``lk_trace`` applies tr(P_k o Hess) to each component of N, with the
Newton transformation P_k of the numerically assembled shape operator.
"""

from dataclasses import dataclass
from math import comb

import numpy as np

from . import jet as J
from .closed_forms import ak_closed
from .errors import ConsistencyError, ConventionMismatch, DegenerateMetric, UnsupportedK
from .hypersurface import (
    RotSurface,
    SurfPoint,
    check_point,
    curvature_jets,
    frame_jets,
    profile_values,
    shape_operator_from_jets,
)
from .jet import Jet
from .minkowski import MinkVec4, mink_dot

N_DIM = 3
EPSILON = 1
AK_REL_TOL = 1e-9
METRIC_DET_MIN = 1e-14
CONVENTIONS = ("signed", "elementary")
TRACE_CONVENTION = "signed"


@dataclass(frozen=True)
class MeanCurvatureSet:
    a1: float
    a2: float
    a3: float
    H1: float
    H2: float
    H3: float
    epsilon: int = EPSILON

    @property
    def a(self):
        return (self.a1, self.a2, self.a3)

    @property
    def H(self):
        return (self.H1, self.H2, self.H3)


@dataclass(frozen=True)
class TangentField:
    """Tangent vector in the coordinate basis together with its image in E^4_1."""

    components: tuple
    pushforward: MinkVec4


def ck(k):
    """C_k = binom(3, k+1) (-eps)^k."""
    if k not in (0, 1, 2):
        raise UnsupportedK(f"C_k is only used for k in {{0, 1, 2}}, got {k}")
    return comb(N_DIM, k + 1) * (-EPSILON) ** k


def ak_from_kappas(k1, k2, k3):
    """Signed elementary symmetric functions a_k = (-1)^k sigma_k (floats or jets)."""
    return (
        -(k1 + k2 + k3),
        k1 * k2 + k1 * k3 + k2 * k3,
        -(k1 * k2 * k3),
    )


def hk_from_ak(a):
    """binom(3,k) H_k = (-eps)^k a_k."""
    return tuple((-EPSILON) ** k * a[k - 1] / comb(N_DIM, k) for k in (1, 2, 3))


def mean_curvatures(surface, s):
    """a_k from the axis closed forms, cross-checked against the kappa definition."""
    f, f1, f2, _ = profile_values(surface, s)
    closed = ak_closed(surface.axis, s, f, f1, f2)
    k1, k2 = (x.value for x in curvature_jets(surface, s))
    sym = ak_from_kappas(k1, k2, k2)
    # scale from the summands, so cancellation (minimal/flat) is not misread as error
    scales = (abs(k1) + 2 * abs(k2), 2 * abs(k1 * k2) + k2 * k2, abs(k1) * k2 * k2)
    for i, (c, r, sc) in enumerate(zip(closed, sym, scales), start=1):
        if abs(c - r) > AK_REL_TOL * max(sc, abs(c), 1e-300):
            raise ConsistencyError(f"a{i} closed form {c!r} disagrees with kappa-based value {r!r}")
    H = hk_from_ak(closed)
    return MeanCurvatureSet(*closed, *H)


# ---------------------------------------------------------------------------
# scalar fields
#
# A field is a callable (surface, p) -> Jet seeded at p.  Jets returned by the
# helpers below carry derivatives in s, t and w up to the stored orders.


def coordinate_field(fn):
    """Wrap ``fn(S, T, W)`` acting on coordinate jets as a field."""

    def field(surface, p):
        return J.lift(fn(Jet.var("s", p.s), Jet.var("t", p.t), Jet.var("w", p.w)))

    return field


def _hk_jets(surface, s):
    k1, k2 = curvature_jets(surface, s)
    return hk_from_ak(ak_from_kappas(k1, k2, k2))


def ak_field(k):
    if k not in (1, 2, 3):
        raise UnsupportedK(f"a_k exists for k in {{1, 2, 3}}, got {k}")

    def field(surface, p):
        k1, k2 = curvature_jets(surface, p.s)
        return ak_from_kappas(k1, k2, k2)[k - 1]

    return field


def mean_curvature_field(k):
    if k not in (1, 2, 3, 4):
        raise UnsupportedK(f"H_k exists for k in {{1, 2, 3, 4}}, got {k}")

    def field(surface, p):
        if k == 4:
            return Jet.const(0.0)
        return _hk_jets(surface, p.s)[k - 1]

    return field


def gauss_component_field(i):
    def field(surface, p):
        return frame_jets(surface, p)[1][i]

    return field


def embedding_component_field(i):
    def field(surface, p):
        return frame_jets(surface, p)[0][i]

    return field


# ---------------------------------------------------------------------------
# gradient


def _gram_jets(gamma):
    """Metric components g_ij as jets (one order lower than the embedding)."""
    parts = [[_partial(x, i) for x in gamma] for i in range(3)]
    return [[mink_dot(parts[i], parts[j]) for j in range(3)] for i in range(3)]


def _partial(x, i):
    """First partial of a jet as a jet, valid to first order."""
    c = J.lift(x)
    if i == 0:
        return Jet.from_s_derivatives((c.ds, c.ds2, c.ds3, np.nan)) + _mixed(c, 0)
    return Jet.const((c.dt, c.dw)[i - 1]) + _mixed(c, i)


def _mixed(c, i):
    """Linear t/w (and s, for i>0) terms of the i-th partial."""
    h = c.hessian()
    out = Jet.const(0.0)
    names = ("s", "t", "w")
    for j in range(3):
        if i == 0 and j == 0:
            continue
        out = out + h[i][j] * (Jet.var(names[j], 0.0))
    return out


def gradient_components(g, df):
    """Coordinate components of grad f for a general (symmetric) metric g."""
    g11, g12, g13 = g[0][0], g[0][1], g[0][2]
    g22, g23, g33 = g[1][1], g[1][2], g[2][2]
    fs, ft, fw = df
    det = g13**2 * g22 - 2 * g12 * g13 * g23 + g11 * g23**2 + g12**2 * g33 - g11 * g22 * g33
    if abs(det) < METRIC_DET_MIN:
        raise DegenerateMetric(f"metric determinant {det:.3g} too small")
    n1 = (g23**2 - g22 * g33) * fs + (-g13 * g23 + g12 * g33) * ft + (g13 * g22 - g12 * g23) * fw
    n2 = (-g13 * g23 + g12 * g33) * fs + (g13**2 - g11 * g33) * ft + (-g12 * g13 + g11 * g23) * fw
    n3 = (g13 * g22 - g12 * g23) * fs + (-g12 * g13 + g11 * g23) * ft + (g12**2 - g11 * g22) * fw
    return (n1 / det, n2 / det, n3 / det)


def gradient(surface, field, p):
    """grad of a scalar field at p, with its pushforward into E^4_1."""
    gamma, _ = frame_jets(surface, p)
    dgamma = [np.array([x.gradient()[i] for x in gamma]) for i in range(3)]
    g = [[mink_dot(dgamma[i], dgamma[j]) for j in range(3)] for i in range(3)]
    df = J.lift(field(surface, p)).gradient()
    comps = gradient_components(g, df)
    push = sum((c * d for c, d in zip(comps, dgamma)), np.zeros(4))
    return TangentField(tuple(float(c) for c in comps), MinkVec4.from_iter(push))


# ---------------------------------------------------------------------------
# generic assembly


def lk_gauss_generic(surface, p, k):
    """L_k N = -eps C_k (grad H_{k+1} + (3 H_1 H_{k+1} - (2-k) H_{k+2}) N)."""
    if k not in (1, 2):
        raise UnsupportedK(f"k must be 1 or 2, got {k}")
    check_point(surface, p)
    H = [h.value for h in _hk_jets(surface, p.s)] + [0.0]
    grad = gradient(surface, mean_curvature_field(k + 1), p).pushforward.as_array()
    N = np.array([x.value for x in frame_jets(surface, p)[1]])
    coef = N_DIM * H[0] * H[k] - (N_DIM - k - 1) * H[k + 1]
    return MinkVec4.from_iter(-EPSILON * ck(k) * (grad + coef * N))


# ---------------------------------------------------------------------------
# trace path


def elementary_symmetric(S):
    """(e1, e2, e3) of the eigenvalues of S, via traces (no eigendecomposition)."""
    S = np.asarray(S, dtype=float)
    t1 = np.trace(S)
    t2 = np.trace(S @ S)
    return (t1, 0.5 * (t1 * t1 - t2), np.linalg.det(S))


def newton_transform(S, k, convention="elementary"):
    """Newton transformation P_k of S.

    ``"elementary"``: P_k = e_k I - S P_{k-1}.
    ``"signed"``: P_k = a_k I + S P_{k-1} with a_k = (-1)^k e_k, i.e. (-1)^k times the former.
    """
    if k not in (0, 1, 2, 3):
        raise UnsupportedK(f"Newton transformation index must be 0..3, got {k}")
    if convention not in CONVENTIONS:
        raise ValueError(f"unknown convention {convention!r}; expected one of {CONVENTIONS}")
    S = np.asarray(S, dtype=float)
    e = elementary_symmetric(S)
    I = np.eye(S.shape[0])
    P = I
    for j in range(1, k + 1):
        if convention == "elementary":
            P = e[j - 1] * I - S @ P
        else:
            P = (-1) ** j * e[j - 1] * I + S @ P
    return P


def christoffel(gamma):
    """Gamma^m_ij at the seed point, from jet derivatives of the metric."""
    g_jets = _gram_jets(gamma)
    g = np.array([[x.value for x in row] for row in g_jets])
    dg = np.array([[[x.gradient()[l] for l in range(3)] for x in row] for row in g_jets])  # dg[i,j,l] = d_l g_ij
    ginv = np.linalg.inv(g)
    # Gamma_{ij,m} = (d_i g_jm + d_j g_im - d_m g_ij) / 2
    low = 0.5 * (np.einsum("jmi->ijm", dg) + np.einsum("imj->ijm", dg) - dg)
    return np.einsum("mn,ijn->mij", ginv, low), g


def _hessian_from(field_jet, chris, g, raised):
    f = J.lift(field_jet)
    H = np.array(f.hessian(), dtype=float) - np.einsum("mij,m->ij", chris, np.array(f.gradient()))
    if not raised:
        return H
    if abs(np.linalg.det(g)) < METRIC_DET_MIN:
        raise DegenerateMetric("metric determinant too small to raise an index")
    return np.linalg.solve(g, H)


def hessian_scalar(surface, field, p, raised=True):
    """Intrinsic Hessian of a scalar field; with ``raised`` the endomorphism g^{-1} Hess."""
    gamma, _ = frame_jets(surface, p)
    chris, g = christoffel(gamma)
    return _hessian_from(field(surface, p), chris, g, raised)


def lk_trace(surface, p, k, convention=TRACE_CONVENTION):
    """Component i of the result is tr(P_k o Hess N_i)."""
    if k not in (1, 2):
        raise UnsupportedK(f"k must be 1 or 2, got {k}")
    gamma, normal = frame_jets(surface, p)
    S, _ = shape_operator_from_jets(gamma, normal)
    P = newton_transform(S, k, convention)
    chris, g = christoffel(gamma)
    out = [float(np.trace(P @ _hessian_from(n, chris, g, True))) for n in normal]
    return MinkVec4(*out)


CALIBRATION_CASES = (
    ("spacelike", "linear:0.5,0", (2.0, 0.0, 0.0), 1),
    ("spacelike", "tanh:0.6", (1.1, 0.3, 0.2), 2),
)


def calibrate_convention(convention=TRACE_CONVENTION, tol=1e-6):
    """Check ``convention`` against the generic path; raise if only the other one fits.

    Returns the convention on success.
    """
    def agrees(conv):
        for axis, prof, pt, k in CALIBRATION_CASES:
            surf, p = RotSurface(axis, prof), SurfPoint(*pt)
            ref = lk_gauss_generic(surf, p, k).as_array()
            got = lk_trace(surf, p, k, conv).as_array()
            if np.max(np.abs(ref - got)) > tol * (1 + np.linalg.norm(ref)):
                return False
        return True

    if agrees(convention):
        return convention
    others = [c for c in CONVENTIONS if c != convention and agrees(c)]
    if others:
        raise ConventionMismatch(
            f"trace path disagrees under convention {convention!r} but matches under {others[0]!r}"
        )
    raise ConventionMismatch(f"trace path matches the generic path under no convention in {CONVENTIONS}")
