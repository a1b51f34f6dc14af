'''
geom.py: Planar geometry on top of a scalar kernel: points, the two-valued
circle-circle intersection and the distance helpers used by the
certification
'''

from dataclasses import dataclass
from enum import IntEnum

from heawood_ude.kernels.kernel import Kernel


class BranchChoice(IntEnum):
    """ Side of the directed centre line c1 -> c2 """
    LEFT = 0
    RIGHT = 1


@dataclass(frozen=True)
class Point2:
    x: object
    y: object

    def __add__(self, other):
        return Point2(self.x + other.x, self.y + other.y)

    def __sub__(self, other):
        return Point2(self.x - other.x, self.y - other.y)

    def scaled(self, factor):
        return Point2(self.x * factor, self.y * factor)

    def dot(self, other):
        return self.x * other.x + self.y * other.y

    def norm_squared(self):
        return self.dot(self)


def point(kernel, x, y):
    return Point2(kernel.scalar(x), kernel.scalar(y))


def to_precision(p, kernel):
    """ Lifts a point into the kernel's context (exact when widening) """
    return Point2(kernel.scalar(p.x), kernel.scalar(p.y))


def midpoint(a, b):
    """ Halving is exact in binary, so no rounding is introduced here """
    return Point2((a.x + b.x) / 2, (a.y + b.y) / 2)


def distance_squared(a, b):
    return (a - b).norm_squared()


def distance(kernel, a, b):
    return kernel.sqrt(distance_squared(a, b))


def point_segment_distance(kernel, p, a, b):
    """ Euclidean distance from p to the closed segment [a, b] """
    ab = b - a
    length_squared = ab.norm_squared()
    if length_squared == 0:
        return distance(kernel, p, a)
    t = (p - a).dot(ab) / length_squared
    if t <= 0:
        return distance(kernel, p, a)
    if t >= 1:
        return distance(kernel, p, b)
    return distance(kernel, p, a + ab.scaled(t))


def reflect_across_horizontal(p, y0):
    return Point2(p.x, 2 * y0 - p.y)


def circle_circle_intersect(c1, r1, c2, r2, b, tol=None, kernel=None):
    """
    Intersects the circles |q - c1| = r1 and |q - c2| = r2

    @type c1, c2: Point2
    @type r1, r2: scalar, positive
    @type b: BranchChoice (or 0/1, or an array of bits on the grid kernel)
    @param b: LEFT picks the point with positive cross product against the
              directed line c1 -> c2, RIGHT its mirror image
    @type tol: scalar
    @param tol: tangency tolerance, defaults to 10^(-digits/2)
    @type kernel: Kernel
    @param kernel: back-end, defaults to mpmath at 60 digits
    @rtype Point2
    @return the selected intersection point
    """
    if kernel is None:
        kernel = Kernel.factory("MPMATH")
    c1 = to_precision(c1, kernel)
    c2 = to_precision(c2, kernel)
    r1 = kernel.scalar(r1)
    r2 = kernel.scalar(r2)
    tol = kernel.tolerance if tol is None else kernel.scalar(tol)

    dx = c2.x - c1.x
    dy = c2.y - c1.y
    d = kernel.guard_concentric(kernel.sqrt(dx * dx + dy * dy), tol)

    a = (d * d + r1 * r1 - r2 * r2) / (2 * d)
    h = kernel.offset(r1 * r1 - a * a, tol)

    ux = dx / d
    uy = dy / d
    sign = 1 - 2 * b
    return Point2(c1.x + a * ux - sign * h * uy,
                  c1.y + a * uy + sign * h * ux)
