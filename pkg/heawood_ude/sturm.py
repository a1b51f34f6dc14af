'''
sturm.py: Holds the Sturm chains of integer polynomials and the cache that
builds each of them once
'''

from threading import Lock

from sympy import Poly, Symbol

from heawood_ude.exceptions import NotSquarefree
from heawood_ude.utilities import homogeneous_sign, sign

T = Symbol('T')


def to_sympy(coefficients):
    """ Poly over ZZ from integer coefficients, constant term first """
    return Poly(list(reversed(coefficients)), T, domain='ZZ')


def from_sympy(poly):
    return tuple(int(c) for c in reversed(poly.all_coeffs()))


def build_chain(coefficients):
    """
    Primitive pseudo-remainder Sturm sequence p, p', s2, ...

    Each element is a positive multiple of the classical remainder
    -rem(s[i-1], s[i]), so the sign pattern at any point is the one of the
    classical Sturm sequence.

    @type coefficients: tuple of int, constant term first
    @rtype tuple of tuple of int
    @raise NotSquarefree: when the last element, gcd(p, p') up to a
        constant, is not constant
    """
    previous = to_sympy(coefficients)
    current = previous.diff(T)
    chain = [previous, current]
    while True:
        delta = previous.degree() - current.degree()
        remainder = previous.prem(current)
        if remainder.is_zero:
            break
        # prem = lc^(delta + 1) rem
        if current.LC() < 0 and (delta + 1) % 2 == 1:
            remainder = -remainder
        _, remainder = (-remainder).primitive()
        previous, current = current, remainder
        chain.append(current)
    if chain[-1].degree() > 0:
        raise NotSquarefree(chain[-1].degree())
    return tuple(from_sympy(p) for p in chain)


def sign_at_infinity(coefficients, direction):
    """ Sign of p(t) as t -> direction * infinity """
    n = len(coefficients) - 1
    return sign(coefficients[-1]) * (direction if n % 2 else 1)


def variations(chain, value):
    """
    Sign changes along the chain at a rational value, or at -inf / +inf
    when value is -1 / +1 given as the string '-inf' / 'inf'
    """
    if value == '-inf':
        signs = [sign_at_infinity(p, -1) for p in chain]
    elif value == 'inf':
        signs = [sign_at_infinity(p, 1) for p in chain]
    else:
        signs = [homogeneous_sign(p, value) for p in chain]
    signs = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


class SturmChains(object):
    """ Builds and keeps the Sturm chain of each polynomial once """
    class __SturmChains(object):
        _chains = {}
        _lock = Lock()

        def get(self, coefficients, logger=None):
            coefficients = tuple(coefficients)
            with self._lock:
                if coefficients not in self._chains:
                    if logger:
                        logger.info("Building Sturm chain of degree " +
                                    str(len(coefficients) - 1) + "..")
                    try:
                        self._chains[coefficients] = build_chain(
                            coefficients)
                    except NotSquarefree as err:
                        self._chains[coefficients] = err
                    if logger:
                        logger.info("..Sturm chain built")
                chain = self._chains[coefficients]
            if isinstance(chain, NotSquarefree):
                raise chain
            return chain

        def clear(self):
            with self._lock:
                self._chains.clear()

    instance = None

    def __init__(self):
        if not SturmChains.instance:
            SturmChains.instance = SturmChains.__SturmChains()

    def __getattr__(self, name):
        return getattr(self.instance, name)
