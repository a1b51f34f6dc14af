'''
multiprecision.py: Arbitrary precision kernel on private mpmath contexts
'''

from fractions import Fraction
from functools import lru_cache

import mpmath

from heawood_ude.exceptions import (
    ConcentricCircles,
    NoIntersection,
    Tangent)
from heawood_ude.kernels.kernel import Kernel


@lru_cache(maxsize=None)
def precision_context(digits):
    """ One mpmath context per precision, never modified after creation """
    ctx = mpmath.MPContext()
    ctx.dps = digits
    return ctx


class MpKernel(Kernel):

    def __init__(self, digits):
        if int(digits) < 5:
            raise ValueError("precision too low: " + str(digits))
        self._digits = int(digits)
        self.ctx = precision_context(self._digits)

    @property
    def digits(self):
        return self._digits

    @property
    def tolerance(self):
        return self.ctx.mpf(10) ** (-self.ctx.mpf(self._digits) / 2)

    def scalar(self, value):
        if isinstance(value, Fraction):
            return self.ctx.mpf(value.numerator) / value.denominator
        return self.ctx.mpf(value)

    def sqrt(self, value):
        return self.ctx.sqrt(value)

    def cos(self, value):
        return self.ctx.cos(value)

    def sin(self, value):
        return self.ctx.sin(value)

    def atan2(self, y, x):
        return self.ctx.atan2(y, x)

    def pi(self):
        return +self.ctx.pi

    def guard_concentric(self, distance, tol):
        if distance <= tol:
            raise ConcentricCircles(
                "centre distance " + self.ctx.nstr(distance, 5) +
                " within tolerance")
        return distance

    def offset(self, h_squared, tol):
        if h_squared < -tol:
            raise NoIntersection(
                "circles are disjoint (r1^2 - a^2 = " +
                self.ctx.nstr(h_squared, 5) + ")")
        if abs(h_squared) <= tol:
            raise Tangent(
                "circles are tangent (r1^2 - a^2 = " +
                self.ctx.nstr(h_squared, 5) + ")")
        return self.ctx.sqrt(h_squared)
