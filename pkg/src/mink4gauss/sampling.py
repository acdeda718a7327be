"""Seeded random valid configurations (surface + point) for property sweeps."""

from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .hypersurface import AxisKind, RotSurface, SurfPoint, check_point
from .profiles import Profile

MAX_TRIES = 10_000


@dataclass(frozen=True)
class Config:
    surface: RotSurface
    point: SurfPoint

    def describe(self):
        p = self.point
        return f"{self.surface.axis.value} {self.surface.profile.spec} at ({p.s!r}, {p.t!r}, {p.w!r})"


def _u(rng, lo, hi):
    return float(rng.uniform(lo, hi))


def _signed(rng, lo, hi):
    return _u(rng, lo, hi) * (1 if rng.random() < 0.5 else -1)


def _random_profile(rng, axis):
    """Draw one profile suited to ``axis`` (may still be invalid at a given point)."""
    kinds = {
        AxisKind.SPACELIKE: ("poly", "tanh", "flat-s", "minimal-s", "firstkind-s"),
        AxisKind.TIMELIKE: ("poly", "tanh", "flat-t", "minimal-t", "firstkind-t"),
        AxisKind.LIGHTLIKE: ("poly", "tanh", "flat-l", "minimal-l"),
    }[axis]
    fam = kinds[int(rng.integers(len(kinds)))]
    timelike = axis is AxisKind.TIMELIKE
    if fam == "poly":
        slope = _signed(rng, 1.2, 3.0) if timelike else _u(rng, -0.7, 0.7)
        coeffs = (_u(rng, -1, 1), slope, _u(rng, -0.15, 0.15), _u(rng, -0.05, 0.05))
        return Profile("poly", coeffs)
    if fam == "tanh":
        return Profile("tanh", (_signed(rng, 2.0, 5.0) if timelike else _u(rng, -0.9, 0.9),))
    if fam == "flat-s":
        return Profile(fam, (_signed(rng, 0.05, 3.0),))
    if fam == "minimal-s":
        return Profile(fam, (_signed(rng, 0.3, 3.0),))
    if fam == "flat-t":
        return Profile(fam, (_signed(rng, 1.2, 8.0),))
    if fam == "minimal-t":
        return Profile(fam, (_signed(rng, 0.5, 4.0),))
    if fam in ("firstkind-s", "firstkind-t"):
        sign = 1 if rng.random() < 0.5 else -1
        return Profile(fam, (_u(rng, 0.2, 2.0), _u(rng, 0.0, 1.0), _u(rng, -1, 1)), sign)
    if fam == "flat-l":
        return Profile(fam, (_u(rng, -0.8, 0.8), _u(rng, -1, 1)))
    s0 = _u(rng, 0.5, 2.0)
    return Profile(fam, (s0, s0 - _signed(rng, 0.5, 1.5), _u(rng, -0.6, 0.6)))


def _random_point(rng, surface):
    fam = surface.profile.family
    if fam in ("poly", "tanh"):
        lo, hi = (0.05, 0.6) if (fam == "tanh" and surface.axis is AxisKind.TIMELIKE) else (0.5, 3.0)
    else:
        lo, hi = surface.profile.default_range()
    return SurfPoint(_u(rng, lo, hi), _u(rng, -1.0, 1.0), _u(rng, -1.0, 1.0))


def random_config(rng, axis):
    """One valid configuration on ``axis``; rejection-samples until guards pass."""
    axis = AxisKind.parse(axis)
    for _ in range(MAX_TRIES):
        try:
            surface = RotSurface(axis, _random_profile(rng, axis))
            p = _random_point(rng, surface)
            check_point(surface, p)
        except DomainError:
            continue
        return Config(surface, p)
    raise RuntimeError(f"no valid {axis.value} configuration after {MAX_TRIES} draws")


def random_configs(axis, n, seed):
    """``n`` seeded configurations; the same (axis, n, seed) always gives the same list."""
    rng = np.random.default_rng([int(seed), list(AxisKind).index(AxisKind.parse(axis))])
    return [random_config(rng, axis) for _ in range(n)]
