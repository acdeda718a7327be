import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from mink4gauss import jet as J
from mink4gauss.jet import Jet

ORDERS = [(0, 0, 0), (1, 0, 0), (2, 0, 0), (3, 0, 0), (0, 1, 0), (0, 0, 1),
          (0, 2, 0), (0, 0, 2), (1, 1, 0), (1, 0, 1), (0, 1, 1)]


def _poly_jet(coeffs, s, t, w):
    S, T, W = Jet.var("s", s), Jet.var("t", t), Jet.var("w", w)
    out = Jet.const(0.0)
    for (a, b, c), k in coeffs.items():
        out = out + k * (S**a) * (T**b) * (W**c)
    return out


def _poly_derivative(coeffs, order, s, t, w):
    """Exact partial of sum k s^a t^b w^c."""
    i, j, l = order
    total = 0.0
    for (a, b, c), k in coeffs.items():
        if a < i or b < j or c < l:
            continue
        f = math.perm(a, i) * math.perm(b, j) * math.perm(c, l)
        total += k * f * s ** (a - i) * t ** (b - j) * w ** (c - l)
    return total


coef = st.floats(-2, 2, allow_nan=False)
point = st.floats(-1.5, 1.5, allow_nan=False)


@settings(max_examples=60, deadline=None)
@given(st.lists(coef, min_size=6, max_size=6), st.lists(coef, min_size=6, max_size=6), point, point, point)
def test_product_rule_on_polynomials(ca, cb, s, t, w):
    monos = [(0, 0, 0), (1, 0, 0), (2, 1, 0), (0, 1, 1), (1, 0, 2), (3, 0, 0)]
    pa = dict(zip(monos, ca))
    pb = dict(zip(monos[::-1], cb))
    prod = {}
    for (ma, ka), (mb, kb) in itertools.product(pa.items(), pb.items()):
        m = tuple(x + y for x, y in zip(ma, mb))
        prod[m] = prod.get(m, 0.0) + ka * kb
    got = _poly_jet(pa, s, t, w) * _poly_jet(pb, s, t, w)
    for order in ORDERS:
        ref = _poly_derivative(prod, order, s, t, w)
        assert got.derivative(*order) == pytest.approx(ref, rel=1e-13, abs=1e-12)


def test_const_and_var_lift():
    c = J.lift(3.5)
    assert c.value == 3.5 and all(v == 0.0 for v in c.c[1:])
    s = Jet.var("s", 2.0)
    assert s.ds == 1.0 and s.dt == 0.0 and s.ds2 == 0.0


def test_from_s_derivatives_slots():
    g = Jet.from_s_derivatives([2.0, 0.5, 0.0, 0.0])
    assert (g.value, g.ds, g.ds2, g.ds3) == (2.0, 0.5, 0.0, 0.0)
    assert g.dt == g.dw == g.dsdt == 0.0


FUNCS = [
    (J.sin, math.sin, (-3, 3)),
    (J.cos, math.cos, (-3, 3)),
    (J.sinh, math.sinh, (-2, 2)),
    (J.cosh, math.cosh, (-2, 2)),
    (J.sqrt, math.sqrt, (0.3, 4)),
    (lambda x: x.reciprocal() if isinstance(x, Jet) else 1 / x, lambda x: 1 / x, (0.4, 3)),
    (J.tanh, math.tanh, (-2, 2)),
]


@pytest.mark.parametrize("jf,f,dom", FUNCS)
def test_chain_rule_against_finite_differences(jf, f, dom):
    rng = np.random.default_rng(11)
    h = 1e-5
    for _ in range(1000 // len(FUNCS) + 1):
        x0 = rng.uniform(*dom)
        t0 = rng.uniform(-0.3, 0.3)
        # inner argument g(s, t) = s + 0.2 t s, evaluated at (x0, t0)
        S, T = Jet.var("s", x0), Jet.var("t", t0)
        j = jf(S + 0.2 * T * S)

        def F(s, t):
            return f(s + 0.2 * t * s)

        d_s = (F(x0 + h, t0) - F(x0 - h, t0)) / (2 * h)
        d_t = (F(x0, t0 + h) - F(x0, t0 - h)) / (2 * h)
        d_ss = (F(x0 + h, t0) - 2 * F(x0, t0) + F(x0 - h, t0)) / h**2
        assert j.ds == pytest.approx(d_s, rel=1e-7, abs=1e-7)
        assert j.dt == pytest.approx(d_t, rel=1e-7, abs=1e-7)
        # second differences lose more digits; step 1e-5 leaves ~1e-5 relative
        assert j.ds2 == pytest.approx(d_ss, rel=1e-4, abs=1e-4)


def test_third_s_derivative_of_composition():
    x = 0.7
    j = J.sin(Jet.var("s", x) ** 2)
    # d^3/ds^3 sin(s^2) = -12 s sin(s^2) - 8 s^3 cos(s^2)
    ref = -12 * x * math.sin(x * x) - 8 * x**3 * math.cos(x * x)
    assert j.ds3 == pytest.approx(ref, rel=1e-13)


def test_division_and_power():
    S = Jet.var("s", 1.5)
    q = (S * S + 1.0) / S
    assert q.ds == pytest.approx(1 - 1 / 1.5**2)
    p = J.power(S, 2.5)
    assert p.ds3 == pytest.approx(2.5 * 1.5 * 0.5 * 1.5**-0.5)


def test_invalid_operations():
    with pytest.raises(ZeroDivisionError):
        Jet.const(0.0).reciprocal()
    with pytest.raises(ValueError):
        J.sqrt(Jet.const(-1.0))
