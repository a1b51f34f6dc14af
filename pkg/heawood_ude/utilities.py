'''
utilities.py:
Set of small helpers for decimal strings and exact rationals
'''

from fractions import Fraction

import mpmath


def to_decimal_string(kernel, value):
    """ Decimal string of a scalar at the kernel's full precision """
    return kernel.ctx.nstr(value, kernel.digits)


def fraction_from_string(text):
    """ Exact rational of '-0.73e-2' or '-73/10000' """
    return Fraction(text.strip())


def sign(value):
    return (value > 0) - (value < 0)


def homogeneous_sign(coefficients, value):
    """
    Sign of p(value) for integer coefficients (constant term first) and a
    rational value, evaluated without fractions as b^n p(a/b) with b > 0

    @type coefficients: sequence of int
    @type value: Fraction or int
    @rtype int
    """
    value = Fraction(value)
    a, b = value.numerator, value.denominator
    n = len(coefficients) - 1
    acc = 0
    power = 1
    # b^n p(a/b) = sum c_i a^i b^(n-i), accumulated from the leading term
    for c in reversed(coefficients):
        acc = acc * a + c * power
        power *= b
    return sign(acc)


def exact_fraction(value):
    """ Exact rational value of an mpf, Fraction, int or decimal string """
    if isinstance(value, (Fraction, int, str)):
        return Fraction(value)
    if not mpmath.isfinite(value):
        raise ValueError("no rational value for " + str(value))
    negative, man, exp, _ = value._mpf_
    man = -int(man) if negative else int(man)
    if exp >= 0:
        return Fraction(man << exp)
    return Fraction(man, 1 << -exp)
