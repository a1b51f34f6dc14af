'''
kernel.py: Holds the scalar back-end common behaviour
'''


class Kernel(object):
    """ Arithmetic primitives the construction chain is written against """

    @staticmethod
    def factory(kernel_type, digits=None):
        if kernel_type == "MPMATH":
            from heawood_ude.kernels.multiprecision import MpKernel
            return MpKernel(DEFAULT_DIGITS if digits is None else digits)
        elif kernel_type == "NUMPY":
            from heawood_ude.kernels.grid import GridKernel
            return GridKernel()
        else:
            return None

    #   ################ ABSTRACT METHODS ################
    @property
    def digits(self):
        """ Working precision in decimal digits """
        raise NotImplementedError("'digits' not implemented.")

    @property
    def tolerance(self):
        """ Default tangency tolerance of the circle intersections """
        raise NotImplementedError("'tolerance' not implemented.")

    def scalar(self, value):
        """
        Converts a number to the kernel representation

        @type value: int, float, str, Fraction or a scalar of any kernel
        @rtype scalar of this kernel
        """
        raise NotImplementedError("'scalar' not implemented.")

    def sqrt(self, value):
        raise NotImplementedError("'sqrt' not implemented.")

    def cos(self, value):
        raise NotImplementedError("'cos' not implemented.")

    def sin(self, value):
        raise NotImplementedError("'sin' not implemented.")

    def atan2(self, y, x):
        raise NotImplementedError("'atan2' not implemented.")

    def pi(self):
        raise NotImplementedError("'pi' not implemented.")

    def guard_concentric(self, distance, tol):
        """
        Validates the distance between two circle centres

        @return the distance, or the kernel's failure marker
        """
        raise NotImplementedError("'guard_concentric' not implemented.")

    def offset(self, h_squared, tol):
        """
        Turns r1^2 - a^2 into the offset of the intersection from the
        centre line, failing on disjoint or tangent circles
        """
        raise NotImplementedError("'offset' not implemented.")
    #   ##################################################

    def threshold(self, shift):
        """ 10^(shift - digits), the residual bounds at this precision """
        return self.scalar(10) ** (shift - self.digits)

    def __repr__(self):
        return type(self).__name__ + "(digits=" + str(self.digits) + ")"


DEFAULT_DIGITS = 60
