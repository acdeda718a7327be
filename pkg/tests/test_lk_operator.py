import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from mink4gauss.closed_forms import lk_gauss_closed
from mink4gauss.errors import ConventionMismatch, UnsupportedK
from mink4gauss.hypersurface import RotSurface, SurfPoint, gauss_map, gram_matrix
from mink4gauss.lk_operator import (
    ak_field, calibrate_convention, embedding_component_field, ck, coordinate_field, elementary_symmetric,
    gradient, gradient_components, hessian_scalar, lk_gauss_generic, lk_trace,
    mean_curvatures, newton_transform,
)

LIN = RotSurface("spacelike", "linear:0.5,0")
CONST = RotSurface("spacelike", "const:1")
P2 = SurfPoint(2.0, 0.0, 0.0)


def test_mean_curvatures_linear():
    m = mean_curvatures(LIN, 2.0)
    assert m.a == pytest.approx((-0.5773503, 0.0833333, 0.0), abs=1e-7)
    assert m.H[0] == pytest.approx(0.1924501, abs=1e-7)
    assert m.H[1] == pytest.approx(1 / 36, rel=1e-12)


def test_mean_curvatures_const_and_minimal():
    assert mean_curvatures(CONST, 1.5).a == (0.0, 0.0, 0.0)
    assert abs(mean_curvatures(RotSurface("spacelike", "minimal-s:1"), 1.0).a1) < 1e-15


def test_ck():
    assert [ck(0), ck(1), ck(2)] == [3, -3, 1]
    with pytest.raises(UnsupportedK):
        ck(3)


def test_gradient_of_a2():
    g = gradient(LIN, ak_field(2), P2)
    assert g.pushforward.tolist() == pytest.approx([1 / 9, 0, 0, 1 / 18], rel=1e-12, abs=1e-15)


def test_gradient_of_coordinate():
    g = gradient(LIN, coordinate_field(lambda s, t, w: s), P2)
    assert g.components == pytest.approx((-4 / 3, 0.0, 0.0), rel=1e-14, abs=1e-15)
    assert gradient(LIN, coordinate_field(lambda s, t, w: 3.0), P2).pushforward.norm() == 0.0


def test_gradient_components_general_metric():
    rng = np.random.default_rng(3)
    A = rng.normal(size=(3, 3))
    g = A + A.T + np.diag([4.0, -5.0, 6.0])
    df = rng.normal(size=3)
    assert gradient_components(g.tolist(), df) == pytest.approx(np.linalg.solve(g, df), rel=1e-12)


def test_generic_examples():
    assert lk_gauss_generic(LIN, P2, 1).tolist() == pytest.approx([1 / 12, 0, 0, 0], abs=1e-15)
    assert lk_gauss_generic(LIN, SurfPoint(1.3, 0.4, -0.2), 2).norm() < 1e-14
    assert lk_gauss_generic(CONST, SurfPoint(1.3, 0.4, -0.2), 1).norm() == 0.0
    with pytest.raises(UnsupportedK):
        lk_gauss_generic(LIN, P2, 3)


def test_newton_transform():
    S = np.diag([1.0, 2.0, 5.0])
    assert np.array_equal(newton_transform(S, 0), np.eye(3))
    assert np.allclose(newton_transform(S, 1), np.diag([7.0, 6.0, 3.0]))
    assert np.allclose(newton_transform(S, 1, "signed"), -np.diag([7.0, 6.0, 3.0]))


@settings(max_examples=50, deadline=None)
@given(st.lists(st.floats(-3, 3, allow_nan=False), min_size=9, max_size=9))
def test_newton_identities(entries):
    S = np.array(entries).reshape(3, 3)
    e = elementary_symmetric(S)
    scale = (1 + np.abs(S).max()) ** 3
    # Cayley-Hamilton: P_3 = 0, and tr(S P_k) = (k+1) e_{k+1}
    assert np.abs(newton_transform(S, 3)).max() <= 1e-10 * scale
    for k in (0, 1, 2):
        assert np.trace(S @ newton_transform(S, k)) == pytest.approx((k + 1) * e[k], abs=1e-10 * scale)
        assert np.trace(newton_transform(S, k)) == pytest.approx((3 - k) * e[k - 1] if k else 3.0, abs=1e-10 * scale)


def test_hessian_constant_and_square():
    surf = RotSurface("spacelike", "tanh:0.6")
    p = SurfPoint(1.1, 0.3, 0.2)
    assert np.abs(hessian_scalar(surf, coordinate_field(lambda s, t, w: 2.5), p)).max() == 0.0
    Hl = hessian_scalar(LIN, coordinate_field(lambda s, t, w: s * s), P2, raised=False)
    # Christoffel Gamma^s_ss vanishes for a linear profile; d_ss(s^2) = 2
    assert Hl[0, 0] == pytest.approx(2.0, rel=1e-13)


def _laplacian_fd(surf, fn, p, h=1e-4):
    """Laplace-Beltrami via the divergence form and central differences."""
    def sqrt_det_ginv(s, t, w):
        g = gram_matrix(surf, SurfPoint(s, t, w))
        return math.sqrt(abs(np.linalg.det(g))), np.linalg.inv(g)

    x = np.array([p.s, p.t, p.w])

    def flux(y, i):
        rd, gi = sqrt_det_ginv(*y)
        grad = np.array([(fn(*(y + h * e)) - fn(*(y - h * e))) / (2 * h) for e in np.eye(3)])
        return rd * (gi @ grad)[i]

    rd, _ = sqrt_det_ginv(*x)
    tot = 0.0
    for i, e in enumerate(np.eye(3)):
        tot += (flux(x + h * e, i) - flux(x - h * e, i)) / (2 * h)
    return tot / rd


def test_laplacian_against_divergence_form():
    surf = RotSurface("spacelike", "tanh:0.6")
    p = SurfPoint(1.1, 0.3, 0.2)
    fn = lambda s, t, w: s * s * t + w
    H = hessian_scalar(surf, coordinate_field(lambda s, t, w: s * s * t + w), p)
    assert np.trace(H) == pytest.approx(_laplacian_fd(surf, fn, p), rel=1e-5)


def test_trace_examples():
    assert lk_trace(LIN, P2, 1).tolist() == pytest.approx([1 / 12, 0, 0, 0], abs=1e-14)
    for k in (1, 2):
        assert lk_trace(CONST, SurfPoint(1.4, 0.1, 0.2), k).norm() < 1e-14
    mins = RotSurface("spacelike", "minimal-s:1")
    p = SurfPoint(1.2, 0.0, 0.0)
    ref = lk_gauss_closed(mins, p, 2).result.as_array()
    got = lk_trace(mins, p, 2).as_array()
    assert np.abs(got - ref).max() <= 1e-6 * np.abs(ref).max()


def test_convention_calibration():
    assert calibrate_convention() == "signed"
    with pytest.raises(ConventionMismatch):
        calibrate_convention("elementary")


def test_laplacian_of_position_is_mean_curvature_vector():
    # Delta Gamma = 3 H_1 N = -a_1 N
    surf = RotSurface("timelike", "poly:0,2,0.1")
    p = SurfPoint(1.3, 0.2, -0.4)
    lap = np.array([np.trace(hessian_scalar(surf, embedding_component_field(i), p)) for i in range(4)])
    a1 = mean_curvatures(surf, p.s).a1
    N = gauss_map(surf, p).as_array()
    assert lap == pytest.approx(-a1 * N, abs=1e-10)
