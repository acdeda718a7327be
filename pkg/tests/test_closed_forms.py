import math

import numpy as np
import pytest

from mink4gauss.closed_forms import (
    corollary_closed, grad_ak_closed, lk_closed_formula, lk_gauss_closed,
    r1_time_printed, special_case_closed,
)
from mink4gauss.errors import CaseMismatch, DomainError
from mink4gauss.hypersurface import RotSurface, SurfPoint, check_point
from mink4gauss.lk_operator import ak_field, gradient, lk_gauss_generic

LIN = RotSurface("spacelike", "linear:0.5,0")
P2 = SurfPoint(2.0, 0.0, 0.0)


def test_linear_breakdown():
    b = lk_gauss_closed(LIN, P2, 1)
    assert b.Q == pytest.approx(-0.10546875, rel=1e-15)
    assert b.R == 0.0
    assert b.P == pytest.approx(0.140625, rel=1e-15)
    assert b.result.tolist() == pytest.approx([1 / 12, 0, 0, 0], abs=1e-15)


def test_linear_k2_and_grad_a3_vanish():
    p = SurfPoint(1.7, 0.3, -0.5)
    assert lk_gauss_closed(LIN, p, 2).result.norm() == 0.0
    assert grad_ak_closed(LIN, p, 3).norm() == 0.0


def test_grad_a2_linear():
    assert grad_ak_closed(LIN, P2, 2).tolist() == pytest.approx([1 / 9, 0, 0, 1 / 18], rel=1e-14, abs=1e-16)


def test_timelike_const_is_guarded():
    with pytest.raises(DomainError):
        lk_gauss_closed(RotSurface("timelike", "const:1"), SurfPoint(1.0, 0.0, 0.0), 1)


FLAT_MIN = [
    ("spacelike", "flat-s:1.7", "flat", (1.3, 0.2, -0.1)),
    ("spacelike", "minimal-s:0.8", "minimal", (1.1, -0.3, 0.4)),
    ("timelike", "flat-t:2.5", "flat", (1.2, 0.4, 0.3)),
    ("timelike", "minimal-t:2", "minimal", (0.9, -0.2, 0.6)),
    ("lightlike", "flat-l:0.3,1", "flat", (0.4, 0.5, -0.3)),
    ("lightlike", "minimal-l:1,0,0.2", "minimal", (1.2, 0.3, 0.25)),
]


@pytest.mark.parametrize("axis,prof,case,pt", FLAT_MIN)
@pytest.mark.parametrize("k", [1, 2])
def test_special_cases_agree(axis, prof, case, pt, k):
    surf, p = RotSurface(axis, prof), SurfPoint(*pt)
    ref = lk_gauss_generic(surf, p, k).as_array()
    tol = 1e-9 * (1 + np.abs(ref).max())
    assert np.abs(special_case_closed(surf, p, case, k).as_array() - ref).max() <= tol
    assert np.abs(lk_gauss_closed(surf, p, k).result.as_array() - ref).max() <= tol
    if prof.split(":")[0] != "minimal-l":
        assert np.abs(corollary_closed(surf, p, k).as_array() - ref).max() <= tol


@pytest.mark.parametrize("axis,prof,case,pt", FLAT_MIN)
@pytest.mark.parametrize("k", [2, 3])
def test_grad_ak_matches_gradient(axis, prof, case, pt, k):
    surf, p = RotSurface(axis, prof), SurfPoint(*pt)
    ref = gradient(surf, ak_field(k), p).pushforward.as_array()
    got = grad_ak_closed(surf, p, k).as_array()
    assert np.abs(got - ref).max() <= 1e-9 * (1 + np.abs(ref).max())


def test_case_mismatch():
    with pytest.raises(CaseMismatch):
        special_case_closed(LIN, P2, "flat", 1)
    with pytest.raises(CaseMismatch):
        special_case_closed(RotSurface("spacelike", "flat-s:1"), P2, "minimal", 1)


def test_lightlike_k2_swap_symmetry():
    surf = RotSurface("lightlike", "poly:3,0.2,0.05")
    a = lk_gauss_closed(surf, SurfPoint(0.8, 0.3, -0.6), 2).result.as_array()
    b = lk_gauss_closed(surf, SurfPoint(0.8, -0.6, 0.3), 2).result.as_array()
    assert a[:2] == pytest.approx(b[:2], rel=1e-14)
    assert (a[2], a[3]) == pytest.approx((b[3], b[2]), rel=1e-14)


def test_timelike_r1_as_printed_disagrees():
    surf = RotSurface("timelike", "poly:0,2,0.1")
    p = SurfPoint(1.3, 0.0, 0.0)
    f, f1, f2, f3 = check_point(surf, p)
    b = lk_gauss_closed(surf, p, 1)
    ref = lk_gauss_generic(surf, p, 1).as_array()
    assert b.result[0] == pytest.approx(ref[0], rel=1e-12)
    printed_first = b.prefactor * r1_time_printed(p.s, f1, f2, f3)
    assert abs(printed_first - ref[0]) > 1e-3 * abs(ref[0])


def test_unguarded_formula_timelike_const():
    v = lk_closed_formula("timelike", 1, 1.3, 0.2, 0.1, 1.0, 0.0, 0.0, 0.0).result
    assert v.norm() == 0.0


def test_corollary_minimal_s_value():
    v = corollary_closed(RotSurface("spacelike", "minimal-s:1"), SurfPoint(1.0, 0.0, 0.0), 1)
    assert v.tolist() == pytest.approx([-42.0, 0.0, 0.0, -24 * math.sqrt(2)], rel=1e-13)
