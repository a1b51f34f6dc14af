'''
grid.py: Vectorised double precision kernel for sampling the closure
residual on a grid of parameters

Failed intersections do not raise: they turn into NaN and propagate to
every vertex constructed afterwards.
'''

from fractions import Fraction

import numpy as np

from heawood_ude.kernels.kernel import Kernel


class GridKernel(Kernel):

    @property
    def digits(self):
        return 15

    @property
    def tolerance(self):
        return 1e-8

    def scalar(self, value):
        if isinstance(value, Fraction):
            value = value.numerator / value.denominator
        return np.asarray(value, dtype=np.float64)

    def sqrt(self, value):
        with np.errstate(invalid='ignore'):
            return np.sqrt(value)

    def cos(self, value):
        return np.cos(value)

    def sin(self, value):
        return np.sin(value)

    def atan2(self, y, x):
        return np.arctan2(y, x)

    def pi(self):
        return np.pi

    def guard_concentric(self, distance, tol):
        return np.where(distance <= tol, np.nan, distance)

    def offset(self, h_squared, tol):
        broken = (h_squared < -tol) | (np.abs(h_squared) <= tol)
        with np.errstate(invalid='ignore'):
            return np.where(broken, np.nan, np.sqrt(np.abs(h_squared)))
