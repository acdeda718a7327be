import math

import pytest
from hypothesis import given, strategies as st

from mink4gauss.errors import BadFamilyParams
from mink4gauss.profiles import FAMILY_AXIS, Profile, family_profile, jet_eval, parse_profile


def test_linear():
    f = parse_profile("linear:0.5,1")
    assert f.derivatives(2.0) == (2.0, 0.5, 0.0, 0.0)


def test_minimal_s_slope():
    f = family_profile("minimal-s", [1.0])
    assert f.derivatives(1.0)[1] == pytest.approx(1 / math.sqrt(2), rel=1e-15)
    assert f.derivatives(0.0)[0] == 0.0


def test_minimal_s_derivatives_by_differences():
    f = family_profile("minimal-s", [1.3])
    h = 1e-4
    s = 0.9
    for j in (1, 2):
        fd = (f.derivatives(s + h)[j - 1] - f.derivatives(s - h)[j - 1]) / (2 * h)
        assert f.derivatives(s)[j] == pytest.approx(fd, rel=1e-6)


def test_firstkind_offset_and_slope():
    f = family_profile("firstkind-s", [1.0, 1.0, 0.25], sign=1)
    f0, f1, *_ = f.derivatives(1.0)
    assert f0 == pytest.approx(0.25, abs=1e-15)
    assert f1 == pytest.approx(math.sqrt(14 / 17), rel=1e-14)
    g = family_profile("firstkind-s", [1.0, 1.0, 0.0], sign=-1)
    assert g.derivatives(1.0)[1] == pytest.approx(-math.sqrt(14 / 17), rel=1e-14)


def test_firstkind_value_is_quadrature():
    f = parse_profile("firstkind-s:1,1,0,+")
    assert f.derivatives(2.0)[0] == pytest.approx(0.94706433421402670, abs=1e-10)


def test_flat_s_slope():
    f = family_profile("flat-s", [1.0])
    assert f.derivatives(3.0)[1] == pytest.approx(1 / math.sqrt(2), rel=1e-15)
    assert f.derivatives(3.0)[2] == 0.0


def test_minimal_t_out_of_domain():
    f = family_profile("minimal-t", [1.0])
    with pytest.raises(BadFamilyParams):
        f.check(1.2)
    with pytest.raises(BadFamilyParams):
        f.derivatives(1.2)


@pytest.mark.parametrize(
    "name,params",
    [("flat-t", [0.5]), ("minimal-s", [0.0]), ("firstkind-s", [-1, 0, 0]), ("nope", [1]), ("linear", [1])],
)
def test_bad_params(name, params):
    with pytest.raises(BadFamilyParams):
        family_profile(name, params)


@pytest.mark.parametrize(
    "spec",
    ["const:1.5", "linear:0.5,-2", "poly:1,2,3", "tanh:0.6", "flat-s:2", "minimal-s:1",
     "flat-t:3", "minimal-t:2", "flat-l:0.3,1", "firstkind-s:1,0,0,+", "firstkind-t:2,0.5,1,-",
     "minimal-l:1,0,0.2"],
)
def test_spec_round_trip(spec):
    p = parse_profile(spec)
    assert parse_profile(p.spec) == p
    assert p.family in FAMILY_AXIS


@given(st.floats(-3, 3), st.floats(-3, 3), st.floats(-3, 3), st.floats(-2, 2))
def test_poly_matches_horner(a0, a1, a2, s):
    p = Profile("poly", (a0, a1, a2))
    f = p.derivatives(s)
    assert f[0] == pytest.approx(a0 + a1 * s + a2 * s * s, abs=1e-12)
    assert f[1] == pytest.approx(a1 + 2 * a2 * s, abs=1e-12)
    assert f[2] == pytest.approx(2 * a2, abs=1e-12)
    assert f[3] == 0.0


def test_jet_eval():
    j = jet_eval(parse_profile("tanh:1"), 0.0)
    assert (j.value, j.ds, j.ds2, j.ds3) == pytest.approx((0.0, 1.0, 0.0, -2.0))
