"""Truncated multivariate Taylor arithmetic in the coordinates (s, t, w).

A :class:`Jet` stores Taylor coefficients for the monomials

    1, s, s^2, s^3, t, w, t^2, w^2, s t, s w, t w

i.e. derivatives up to order 3 in ``s`` and order 2 overall in ``t``, ``w``
(mixed terms included).  The monomial set is closed under taking divisors,
so products truncated to it are exact on every stored slot.

Slots whose value is unknown (for example the third ``s`` derivative of
``f'`` when only ``f'''`` is available) are carried as NaN; NaN only ever
flows into slots of equal or higher ``s`` order, never into lower ones.
"""

import math

_MONOMIALS = (
    (0, 0, 0),
    (1, 0, 0), (2, 0, 0), (3, 0, 0),
    (0, 1, 0), (0, 0, 1), (0, 2, 0), (0, 0, 2),
    (1, 1, 0), (1, 0, 1), (0, 1, 1),
)
_INDEX = {m: i for i, m in enumerate(_MONOMIALS)}
_NSLOT = len(_MONOMIALS)
_MAX_DEGREE = 3

_PAIRS = tuple(
    (i, j, _INDEX[tuple(a + b for a, b in zip(mi, mj))])
    for i, mi in enumerate(_MONOMIALS)
    for j, mj in enumerate(_MONOMIALS)
    if tuple(a + b for a, b in zip(mi, mj)) in _INDEX
)
# pairs that do not involve the constant term; used for powers of a
# zero-constant perturbation
_PAIRS_NONCONST = tuple(p for p in _PAIRS if p[0] and p[1])

# derivative = Taylor coefficient * (i! j! k!)
_FACT = tuple(
    float(math.factorial(a) * math.factorial(b) * math.factorial(c))
    for a, b, c in _MONOMIALS
)


class Jet:
    """Scalar with exact partial derivatives in (s, t, w)."""

    __slots__ = ("c",)

    def __init__(self, coeffs):
        self.c = list(coeffs)

    # -- constructors -------------------------------------------------
    @classmethod
    def const(cls, value):
        c = [0.0] * _NSLOT
        c[0] = float(value)
        return cls(c)

    @classmethod
    def var(cls, name, value):
        c = [0.0] * _NSLOT
        c[0] = float(value)
        c[{"s": 1, "t": 4, "w": 5}[name]] = 1.0
        return cls(c)

    @classmethod
    def from_s_derivatives(cls, derivs):
        """Jet of a function of ``s`` alone from ``[g, g', g'', g''']``."""
        c = [0.0] * _NSLOT
        for order, d in enumerate(derivs[:4]):
            c[order] = d / math.factorial(order)
        return cls(c)

    # -- slot access --------------------------------------------------
    @property
    def value(self):
        return self.c[0]

    @property
    def ds(self):
        return self.c[1]

    @property
    def ds2(self):
        return 2.0 * self.c[2]

    @property
    def ds3(self):
        return 6.0 * self.c[3]

    @property
    def dt(self):
        return self.c[4]

    @property
    def dw(self):
        return self.c[5]

    @property
    def dt2(self):
        return 2.0 * self.c[6]

    @property
    def dw2(self):
        return 2.0 * self.c[7]

    @property
    def dsdt(self):
        return self.c[8]

    @property
    def dsdw(self):
        return self.c[9]

    @property
    def dtdw(self):
        return self.c[10]

    def gradient(self):
        """First partials ``(d/ds, d/dt, d/dw)``."""
        return (self.c[1], self.c[4], self.c[5])

    def hessian(self):
        """Second partials as a nested 3x3 list in (s, t, w) order."""
        c = self.c
        return [
            [2.0 * c[2], c[8], c[9]],
            [c[8], 2.0 * c[6], c[10]],
            [c[9], c[10], 2.0 * c[7]],
        ]

    def derivative(self, i, j, k):
        """Partial derivative of order (i, j, k) in (s, t, w)."""
        idx = _INDEX[(i, j, k)]
        return self.c[idx] * _FACT[idx]

    # -- arithmetic ---------------------------------------------------
    def __add__(self, other):
        if isinstance(other, Jet):
            return Jet([a + b for a, b in zip(self.c, other.c)])
        c = list(self.c)
        c[0] += other
        return Jet(c)

    __radd__ = __add__

    def __neg__(self):
        return Jet([-a for a in self.c])

    def __sub__(self, other):
        if isinstance(other, Jet):
            return Jet([a - b for a, b in zip(self.c, other.c)])
        c = list(self.c)
        c[0] -= other
        return Jet(c)

    def __rsub__(self, other):
        c = [-a for a in self.c]
        c[0] += other
        return Jet(c)

    def __mul__(self, other):
        if not isinstance(other, Jet):
            return Jet([a * other for a in self.c])
        a, b = self.c, other.c
        out = [0.0] * _NSLOT
        for i, j, k in _PAIRS:
            out[k] += a[i] * b[j]
        return Jet(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Jet):
            return self * other.reciprocal()
        return Jet([a / other for a in self.c])

    def __rtruediv__(self, other):
        return self.reciprocal() * other

    def __pow__(self, p):
        if isinstance(p, int) and p >= 0:
            out = Jet.const(1.0)
            for _ in range(p):
                out = out * self
            return out
        return power(self, p)

    def reciprocal(self):
        x = self.c[0]
        if x == 0.0:
            raise ZeroDivisionError("reciprocal of a jet with zero value")
        return _compose(self, (1.0 / x, -1.0 / x**2, 2.0 / x**3, -6.0 / x**4))

    def __repr__(self):
        return (
            f"Jet(value={self.value!r}, ds={self.ds!r}, ds2={self.ds2!r}, "
            f"ds3={self.ds3!r}, dt={self.dt!r}, dw={self.dw!r})"
        )


def _compose(x, derivs):
    """Apply a scalar function with derivatives ``derivs`` at ``x.value``."""
    delta = list(x.c)
    delta[0] = 0.0
    out = [0.0] * _NSLOT
    out[0] = derivs[0]
    power_ = delta
    for n in range(1, _MAX_DEGREE + 1):
        coef = derivs[n] / math.factorial(n)
        if coef != 0.0:
            for i in range(1, _NSLOT):
                out[i] += coef * power_[i]
        if n < _MAX_DEGREE:
            nxt = [0.0] * _NSLOT
            for i, j, k in _PAIRS_NONCONST:
                nxt[k] += power_[i] * delta[j]
            power_ = nxt
    return Jet(out)


def lift(x):
    return x if isinstance(x, Jet) else Jet.const(x)


def sqrt(x):
    if not isinstance(x, Jet):
        return math.sqrt(x)
    v = x.c[0]
    if v <= 0.0:
        raise ValueError("sqrt of a jet needs a positive value")
    r = math.sqrt(v)
    return _compose(x, (r, 0.5 / r, -0.25 / (r * v), 0.375 / (r * v * v)))


def power(x, p):
    if not isinstance(x, Jet):
        return x**p
    v = x.c[0]
    if v <= 0.0 and float(p) != int(p):
        raise ValueError("non-integer power of a jet needs a positive value")
    return _compose(
        x,
        (
            v**p,
            p * v ** (p - 1),
            p * (p - 1) * v ** (p - 2),
            p * (p - 1) * (p - 2) * v ** (p - 3),
        ),
    )


def exp(x):
    if not isinstance(x, Jet):
        return math.exp(x)
    e = math.exp(x.c[0])
    return _compose(x, (e, e, e, e))


def log(x):
    if not isinstance(x, Jet):
        return math.log(x)
    v = x.c[0]
    return _compose(x, (math.log(v), 1.0 / v, -1.0 / v**2, 2.0 / v**3))


def sin(x):
    if not isinstance(x, Jet):
        return math.sin(x)
    s, c = math.sin(x.c[0]), math.cos(x.c[0])
    return _compose(x, (s, c, -s, -c))


def cos(x):
    if not isinstance(x, Jet):
        return math.cos(x)
    s, c = math.sin(x.c[0]), math.cos(x.c[0])
    return _compose(x, (c, -s, -c, s))


def sinh(x):
    if not isinstance(x, Jet):
        return math.sinh(x)
    s, c = math.sinh(x.c[0]), math.cosh(x.c[0])
    return _compose(x, (s, c, s, c))


def cosh(x):
    if not isinstance(x, Jet):
        return math.cosh(x)
    s, c = math.sinh(x.c[0]), math.cosh(x.c[0])
    return _compose(x, (c, s, c, s))


def tanh(x):
    if not isinstance(x, Jet):
        return math.tanh(x)
    th = math.tanh(x.c[0])
    sech2 = 1.0 - th * th
    return _compose(x, (th, sech2, -2.0 * th * sech2, sech2 * (6.0 * th * th - 2.0)))
