"""Profile-curve families ``f(s)`` and the textual profile grammar.

Grammar (shared with the CLI)::

    const:a                      f = a
    linear:a,b                   f = a s + b
    poly:a0,a1,...               f = a0 + a1 s + ...
    tanh:a                       f = a tanh(s)
    flat-s:c1                    f = c1^(1/3) s / sqrt(1 + c1^(2/3))
    minimal-s:c2                 f' = c2 / sqrt(s^4 + c2^2),  f(0) = 0
    flat-t:c7                    f = c7^(1/3) s / sqrt(c7^(2/3) - 1)
    minimal-t:c8                 f' = c8 / sqrt(c8^2 - s^4),  f(0) = 0
    flat-l:c13,c14               f = c13 s + c14
    firstkind-s:c4,c5,c6,+|-     f = +-int_1^s sqrt(2(6 c4 c5 x^3 + c4)) / sqrt(12 c4 c5 x^3 + 3x + 2 c4) dx + c6
    firstkind-t:c10,c11,c12,+|-  same integrand with (c10, c11), offset c12
    minimal-l:s0,f0,g0           solution of a1 = 0 on the lightlike axis,
                                 f(s0) = f0, f'(s0) = g0
"""

from dataclasses import dataclass, field
from functools import lru_cache
import math

from . import jet as J
from .errors import BadFamilyParams, DomainError, QuadNonConvergence
from .jet import Jet
from .quadrature import quad

QUAD_TOL = 1e-13

# family name -> axis it belongs to (None = generic test profile)
FAMILY_AXIS = {
    "const": None,
    "linear": None,
    "poly": None,
    "tanh": None,
    "flat-s": "spacelike",
    "minimal-s": "spacelike",
    "firstkind-s": "spacelike",
    "flat-t": "timelike",
    "minimal-t": "timelike",
    "firstkind-t": "timelike",
    "flat-l": "lightlike",
    "minimal-l": "lightlike",
}

_NPARAMS = {
    "const": 1,
    "linear": 2,
    "tanh": 1,
    "flat-s": 1,
    "minimal-s": 1,
    "flat-t": 1,
    "minimal-t": 1,
    "flat-l": 2,
    "firstkind-s": 3,
    "firstkind-t": 3,
    "minimal-l": 3,
}


def _cbrt(x):
    return math.copysign(abs(x) ** (1.0 / 3.0), x)


def _fmt(x):
    r = repr(float(x))
    return r[:-2] if r.endswith(".0") else r


@dataclass(frozen=True)
class Profile:
    """A named profile family with parameters.

    ``sign`` is only meaningful for the first-kind families (the +- branch).
    """

    family: str
    params: tuple
    sign: int = 1
    _key: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.family not in FAMILY_AXIS:
            raise BadFamilyParams(f"unknown profile family {self.family!r}")
        params = tuple(float(p) for p in self.params)
        object.__setattr__(self, "params", params)
        need = _NPARAMS.get(self.family)
        if need is not None and len(params) != need:
            raise BadFamilyParams(
                f"{self.family} takes {need} parameter(s), got {len(params)}"
            )
        if self.family == "poly" and not params:
            raise BadFamilyParams("poly needs at least one coefficient")
        if self.sign not in (1, -1):
            raise BadFamilyParams("sign must be +1 or -1")
        _check_params(self.family, params)
        object.__setattr__(self, "_key", (self.family, params, self.sign))

    # -- text form ----------------------------------------------------
    @property
    def spec(self):
        body = ",".join(_fmt(p) for p in self.params)
        if self.family in ("firstkind-s", "firstkind-t"):
            body += ",+" if self.sign > 0 else ",-"
        return f"{self.family}:{body}"

    def __str__(self):
        return self.spec

    @property
    def axis(self):
        return FAMILY_AXIS[self.family]

    # -- evaluation ---------------------------------------------------
    def derivatives(self, s):
        """Return ``(f, f', f'', f''')`` at ``s`` (exact up to quadrature in ``f``)."""
        return _derivatives(self._key, float(s))

    def check(self, s):
        """Raise :class:`BadFamilyParams` when ``s`` is outside the family domain."""
        _check_point(self.family, self.params, self.sign, float(s))

    def default_range(self):
        """An s-interval inside the validity domain, used for sample plans."""
        return _default_range(self.family, self.params)


def parse_profile(text):
    """Parse the profile grammar into a :class:`Profile`."""
    if ":" not in text:
        raise BadFamilyParams(f"profile spec {text!r} lacks 'family:params'")
    family, _, body = text.strip().partition(":")
    family = family.strip()
    tokens = [tok.strip() for tok in body.split(",") if tok.strip()]
    sign = 1
    if family in ("firstkind-s", "firstkind-t"):
        if tokens and tokens[-1] in ("+", "-", "±", "+-"):
            last = tokens.pop()
            sign = -1 if last == "-" else 1
    try:
        params = tuple(float(tok) for tok in tokens)
    except ValueError as exc:
        raise BadFamilyParams(f"bad number in profile spec {text!r}") from exc
    return Profile(family, params, sign)


def family_profile(name, params, sign=1):
    """Materialize a named family; constraint violations raise BadFamilyParams."""
    return Profile(name, tuple(params), sign)


def jet_eval(profile, s):
    """Jet of ``f`` at ``s``: value and exact ``s`` derivatives up to order 3."""
    return Jet.from_s_derivatives(profile.derivatives(s))


def derivative_jets(profile, s):
    """Jets of ``f, f', f''`` as functions of ``s`` (unknown high slots are NaN)."""
    f0, f1, f2, f3 = profile.derivatives(s)
    nan = math.nan
    return (
        Jet.from_s_derivatives((f0, f1, f2, f3)),
        Jet.from_s_derivatives((f1, f2, f3, nan)),
        Jet.from_s_derivatives((f2, f3, nan, nan)),
    )


# ---------------------------------------------------------------------------
# family definitions


def _check_params(family, p):
    if family == "flat-t" and abs(p[0]) <= 1.0:
        raise BadFamilyParams("flat-t needs c7^(2/3) > 1, i.e. |c7| > 1")
    if family in ("minimal-s", "minimal-t") and p[0] == 0.0:
        raise BadFamilyParams(f"{family} needs a nonzero constant")
    if family in ("firstkind-s", "firstkind-t"):
        if p[0] <= 0.0:
            raise BadFamilyParams(f"{family} needs c > 0 for its first constant")
        if p[1] < 0.0:
            raise BadFamilyParams(f"{family} needs a non-negative second constant")
    if family == "minimal-l":
        s0, f0, g0 = p
        if abs(g0) >= 1.0:
            raise BadFamilyParams("minimal-l needs |f'(s0)| < 1")
        if s0 == f0:
            raise BadFamilyParams("minimal-l needs s0 != f0")


def _firstkind_parts(c, d, x):
    """Radicands of the first-kind integrand: numerator, denominator."""
    return 2.0 * (6.0 * c * d * x**3 + c), 12.0 * c * d * x**3 + 3.0 * x + 2.0 * c


def _firstkind_lower_bound(c, d):
    """Infimum of x for which both radicands stay positive (both increase in x)."""
    def ok(x):
        num, den = _firstkind_parts(c, d, x)
        return num > 0.0 and den > 0.0

    lo, hi = -1.0, 0.0
    while ok(lo):
        lo *= 2.0
        if lo < -1e6:
            return -math.inf
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if ok(mid):
            hi = mid
        else:
            lo = mid
    return hi


def _check_point(family, p, sign, s):
    if not math.isfinite(s):
        raise DomainError("s must be finite")
    if family == "minimal-t":
        if s**4 >= p[0] ** 2:
            raise BadFamilyParams(f"minimal-t requires s^4 < c8^2 (s={s}, c8={p[0]})")
    elif family == "firstkind-s":
        if s <= 0.0:
            raise BadFamilyParams("firstkind-s requires s > 0")
    elif family == "firstkind-t":
        if s >= 0.0:
            raise BadFamilyParams("firstkind-t requires s < 0 (f'^2 > 1 only there)")
        if s <= _firstkind_lower_bound(p[0], p[1]):
            raise BadFamilyParams(
                "firstkind-t integrand is not real on the path from 1 to s"
            )


def _f_jet(family, p, S):
    """Jet of f for families with a closed-form f."""
    if family == "const":
        return Jet.const(p[0]) + 0.0 * S
    if family == "linear":
        return p[0] * S + p[1]
    if family == "poly":
        out = Jet.const(0.0)
        for coef in reversed(p):
            out = out * S + coef
        return out
    if family == "tanh":
        return p[0] * J.tanh(S)
    if family == "flat-s":
        c = _cbrt(p[0])
        return c / math.sqrt(1.0 + c * c) * S
    if family == "flat-t":
        c = _cbrt(p[0])
        return c / math.sqrt(c * c - 1.0) * S
    if family == "flat-l":
        return p[0] * S + p[1]
    return None


def _fp_jet(family, p, sign, X):
    """Jet of f' for families defined through their derivative."""
    if family == "minimal-s":
        c = p[0]
        return c / J.sqrt(X**4 + c * c)
    if family == "minimal-t":
        c = p[0]
        return c / J.sqrt(c * c - X**4)
    if family in ("firstkind-s", "firstkind-t"):
        c, d = p[0], p[1]
        num = 2.0 * (6.0 * c * d * X**3 + c)
        den = 12.0 * c * d * X**3 + 3.0 * X + 2.0 * c
        return sign * J.sqrt(num) / J.sqrt(den)
    raise AssertionError(family)


def _fp_float(family, p, sign, x):
    if family == "minimal-s":
        return p[0] / math.sqrt(x**4 + p[0] ** 2)
    if family == "minimal-t":
        return p[0] / math.sqrt(p[0] ** 2 - x**4)
    num, den = _firstkind_parts(p[0], p[1], x)
    return sign * math.sqrt(num) / math.sqrt(den)


@lru_cache(maxsize=65536)
def _derivatives(key, s):
    family, p, sign = key
    _check_point(family, p, sign, s)
    if family == "minimal-l":
        return _minimal_light(p, s)
    S = Jet.var("s", s)
    fj = _f_jet(family, p, S)
    if fj is not None:
        return (fj.value, fj.ds, fj.ds2, fj.ds3)
    g = _fp_jet(family, p, sign, S)
    if family in ("firstkind-s", "firstkind-t"):
        lower, offset = 1.0, p[2]
    else:
        lower, offset = 0.0, 0.0
    try:
        val = quad(lambda x: _fp_float(family, p, sign, x), lower, s, tol=QUAD_TOL)
    except QuadNonConvergence as exc:
        val = exc.estimate
    return (val + offset, g.value, g.ds, g.ds2)


def _minimal_light_rhs(s, f, g):
    """f'' from a1 = 0 on the lightlike axis: (s - f) f'' = 2 (f' - 1)^2 (f' + 1)."""
    return 2.0 * (g - 1.0) ** 2 * (g + 1.0) / (s - f)


def _minimal_light(p, s):
    from scipy.integrate import solve_ivp

    s0, f0, g0 = p
    if s == s0:
        f, g = f0, g0
    else:
        sol = solve_ivp(
            lambda x, y: [y[1], _minimal_light_rhs(x, y[0], y[1])],
            (s0, s),
            [f0, g0],
            method="DOP853",
            rtol=1e-13,
            atol=1e-14,
        )
        if sol.status != 0 or not all(math.isfinite(v) for v in sol.y[:, -1]):
            raise BadFamilyParams(f"minimal-l ODE solution does not reach s={s}")
        f, g = (float(v) for v in sol.y[:, -1])
    if abs(g) >= 1.0 or s == f:
        raise BadFamilyParams(f"minimal-l solution leaves |f'| < 1 before s={s}")
    u = s - f
    f2 = _minimal_light_rhs(s, f, g)
    # d/ds of the rhs, using u' = 1 - f'
    f3 = (2.0 * (g - 1.0) * (3.0 * g + 1.0) * f2 * u - 2.0 * (g - 1.0) ** 2 * (g + 1.0) * (1.0 - g)) / u**2
    return (f, g, f2, f3)


def _default_range(family, p):
    if family == "minimal-t":
        r = math.sqrt(abs(p[0]))
        return (0.3 * r, 0.9 * r)
    if family == "firstkind-t":
        lb = _firstkind_lower_bound(p[0], p[1])
        lb = max(lb, -3.0)
        return (0.9 * lb, 0.15 * lb)
    if family == "flat-l":
        c13, c14 = p
        if c13 == 1.0:
            return (0.5, 3.0)
        root = c14 / (1.0 - c13)  # s == f here
        lo = max(0.5, root + 0.5)
        return (lo, lo + 2.5)
    if family == "minimal-l":
        s0, f0, _ = p
        step = 0.25 * abs(s0 - f0)
        return (s0, s0 + step) if s0 > f0 else (s0 - step, s0)
    return (0.5, 3.0)
