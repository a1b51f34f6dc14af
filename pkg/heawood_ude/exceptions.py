'''
exceptions.py: Holds the errors raised across the package
'''


class HeawoodError(Exception):
    """ Base of every error raised by heawood_ude """


class ConfigurationError(HeawoodError):
    """ Invalid solver or rendering settings """


class GeometryError(HeawoodError):
    """ A circle-circle intersection could not be formed """


class NoIntersection(GeometryError):
    """ The two circles are disjoint """


class Tangent(GeometryError):
    """ The two circles touch; both branches collapse to one point """


class ConcentricCircles(GeometryError):
    """ The circle centres coincide """


class ChainBroken(HeawoodError):
    """ A construction step failed

    @type step: VertexLabel
    @param step: first vertex of the chain that could not be placed
    @type cause: GeometryError
    @param cause: geometry failure behind it
    """

    def __init__(self, step, cause=None):
        self.step = step
        self.cause = cause
        message = "chain broken at " + str(step)
        if cause is not None:
            message += " (" + type(cause).__name__ + ")"
        super().__init__(message)


class LostBracket(HeawoodError):
    """ The sign change of a bracket vanished during refinement """


class SingularJacobian(HeawoodError):
    """ Newton's linear system is (numerically) singular """


class NoConvergence(HeawoodError):
    """ Newton's method exhausted its iterations """


class NotSquarefree(HeawoodError):
    """ gcd(p, p') is not constant """

    def __init__(self, gcd_degree):
        self.gcd_degree = gcd_degree
        super().__init__(
            "polynomial is not squarefree: gcd(p, p') has degree " +
            str(gcd_degree))


class ChecksumMismatch(HeawoodError):
    """ A packaged coefficient table does not match its recorded sha256 """
