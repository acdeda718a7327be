"""Vectors of Lorentz-Minkowski 4-space with signature (-, +, +, +)."""

from dataclasses import dataclass
import math

import numpy as np


@dataclass(frozen=True)
class MinkVec4:
    """Ambient 4-vector; ``x1`` is the timelike coordinate."""

    x1: float
    x2: float
    x3: float
    x4: float

    @classmethod
    def from_iter(cls, values):
        a, b, c, d = (float(v) for v in values)
        return cls(a, b, c, d)

    @classmethod
    def zero(cls):
        return cls(0.0, 0.0, 0.0, 0.0)

    def __iter__(self):
        yield self.x1
        yield self.x2
        yield self.x3
        yield self.x4

    def __getitem__(self, i):
        return (self.x1, self.x2, self.x3, self.x4)[i]

    def __add__(self, other):
        return MinkVec4(*(a + b for a, b in zip(self, other)))

    def __sub__(self, other):
        return MinkVec4(*(a - b for a, b in zip(self, other)))

    def __mul__(self, k):
        return MinkVec4(*(a * k for a in self))

    __rmul__ = __mul__

    def __neg__(self):
        return MinkVec4(-self.x1, -self.x2, -self.x3, -self.x4)

    def as_array(self):
        return np.array([self.x1, self.x2, self.x3, self.x4])

    def norm(self):
        """Euclidean length of the coordinate tuple (used for tolerances)."""
        return math.sqrt(self.x1**2 + self.x2**2 + self.x3**2 + self.x4**2)

    def tolist(self):
        return [self.x1, self.x2, self.x3, self.x4]


def mink_dot(u, v):
    """Signature (-, +, +, +) bilinear form.

    Works on anything indexable with four entries, including tuples of
    :class:`~mink4gauss.jet.Jet`.
    """
    return -u[0] * v[0] + u[1] * v[1] + u[2] * v[2] + u[3] * v[3]
