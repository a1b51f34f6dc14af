'''
charpoly.py: Holds the degree 79 integer characteristic polynomial of the
coordinate x_l4 and the exact real root machinery built on it: Horner
evaluation over the rationals, Sturm counts, isolating intervals and their
refinement
'''

import hashlib
import logging
import math
import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from heawood_ude.chain import L4
from heawood_ude.config import DATA_DIR, load_yaml
from heawood_ude.exceptions import ChecksumMismatch, NotSquarefree
from heawood_ude.kernels.kernel import Kernel
from heawood_ude.sturm import (
    SturmChains,
    from_sympy,
    sign_at_infinity as _chain_sign_at_infinity,
    to_sympy,
    variations)
from heawood_ude.utilities import exact_fraction, homogeneous_sign

LOGGER = logging.getLogger(__name__)

COEFFICIENTS_FILE = os.path.join(DATA_DIR, 'charpoly_xl4.yaml')
EXPECTED_DEGREE = 79
EXPECTED_REAL_ROOTS = 11
BRACKET_WIDTH = Fraction(1, 10 ** 20)


@dataclass(frozen=True)
class BigPoly:
    """ Integer polynomial, coefficients[i] multiplies T^i """
    coefficients: tuple

    def __post_init__(self):
        coefficients = tuple(int(c) for c in self.coefficients)
        if not coefficients or coefficients[-1] == 0:
            raise ValueError("leading coefficient must be nonzero")
        object.__setattr__(self, 'coefficients', coefficients)

    @property
    def degree(self):
        return len(self.coefficients) - 1

    @property
    def leading(self):
        return self.coefficients[-1]

    def __getitem__(self, power):
        return self.coefficients[power]


@dataclass(frozen=True)
class IsolatingInterval:
    """ (lo, hi] holds exactly one real root """
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if not self.lo < self.hi:
            raise ValueError("empty isolating interval")

    def contains(self, value):
        return self.lo < Fraction(value) <= self.hi

    def to_dict(self):
        return {'lo': str(self.lo), 'hi': str(self.hi)}


def load_coefficients(path=None):
    """
    Reads a coefficient table and checks it against its sha256

    @type path: str, defaults to the packaged charpoly_xl4.yaml
    @rtype tuple of int
    @raise ChecksumMismatch: on any altered, missing or extra coefficient
    """
    path = path or COEFFICIENTS_FILE
    table = load_yaml(path)
    strings = [str(c).strip() for c in table['coefficients']]
    digest = hashlib.sha256('\n'.join(strings).encode('ascii')).hexdigest()
    if digest != table['sha256']:
        raise ChecksumMismatch("coefficients of '" + path +
                               "' do not match the recorded sha256")
    if len(strings) != int(table['degree']) + 1:
        raise ChecksumMismatch("expected " + str(table['degree'] + 1) +
                               " coefficients, got " + str(len(strings)))
    return tuple(int(s) for s in strings)


@lru_cache(maxsize=None)
def charpoly_xl4():
    """
    @rtype BigPoly
    @return the characteristic polynomial of x_l4, degree 79
    """
    return BigPoly(load_coefficients())


def eval_exact(p, t):
    """ p(t) over the rationals, by Horner """
    t = Fraction(t)
    value = Fraction(0)
    for c in reversed(p.coefficients):
        value = value * t + c
    return value


def sign_at(p, t):
    """ Exact sign of p at a rational point, without fractions """
    return homogeneous_sign(p.coefficients, t)


def sign_at_infinity(p, direction):
    """ @param direction: +1 or -1 """
    return _chain_sign_at_infinity(p.coefficients, direction)


def squarefree_part(p):
    """ p / gcd(p, p'), primitive with positive leading coefficient """
    part = to_sympy(p.coefficients).sqf_part()
    coefficients = from_sympy(part)
    if coefficients[-1] < 0:
        coefficients = tuple(-c for c in coefficients)
    return BigPoly(coefficients)


def sturm_chain(p, logger=LOGGER):
    """ @raise NotSquarefree """
    return SturmChains().get(p.coefficients, logger)


def _endpoint(value, default):
    if value is None:
        return default
    if isinstance(value, float) and math.isinf(value):
        return 'inf' if value > 0 else '-inf'
    if value in ('inf', '-inf'):
        return value
    return Fraction(value)


def _squarefree(p, logger):
    """ (p, chain), or the squarefree part and its chain """
    try:
        return p, sturm_chain(p, logger)
    except NotSquarefree as err:
        logger.warning(str(err) + ". Working on its squarefree part "
                       "instead")
        part = squarefree_part(p)
        return part, sturm_chain(part, logger)


def count_real_roots(p, lo=None, hi=None, logger=LOGGER):
    """
    Distinct real roots in (lo, hi], by Sturm's theorem

    @type p: BigPoly
    @type lo, hi: rationals (int, Fraction or exact decimal string); None
        or float('inf') with a sign for an unbounded side
    @rtype int
    """
    lo = _endpoint(lo, '-inf')
    hi = _endpoint(hi, 'inf')
    if lo == 'inf' or hi == '-inf' or (
            isinstance(lo, Fraction) and isinstance(hi, Fraction) and
            not lo < hi):
        raise ValueError("count_real_roots needs lo < hi")
    _, chain = _squarefree(p, logger)
    return variations(chain, lo) - variations(chain, hi)


def cauchy_bound(p):
    """ Integer B with every root inside (-B, B) """
    leading = abs(p.leading)
    largest = max(abs(c) for c in p.coefficients[:-1]) if p.degree else 0
    return 1 + -(-largest // leading) + 1


def isolate_real_roots(p, logger=LOGGER):
    """
    One isolating interval per distinct real root, ascending

    @type p: BigPoly
    @rtype list of IsolatingInterval
    """
    logger.info("Isolating real roots of a degree " + str(p.degree) +
                " polynomial..")
    _, chain = _squarefree(p, logger)
    bound = Fraction(cauchy_bound(p))
    intervals = []
    pending = [(-bound, bound, variations(chain, -bound),
                variations(chain, bound))]
    while pending:
        lo, hi, v_lo, v_hi = pending.pop()
        count = v_lo - v_hi
        if count == 0:
            continue
        if count == 1:
            intervals.append(IsolatingInterval(lo, hi))
            continue
        mid = (lo + hi) / 2
        v_mid = variations(chain, mid)
        pending.append((mid, hi, v_mid, v_hi))
        pending.append((lo, mid, v_lo, v_mid))
    intervals.sort(key=lambda iv: iv.lo)
    logger.info("..found " + str(len(intervals)) + " real roots")
    return intervals


def _nonroot_lower_end(p, iv, logger):
    """ Moves a lower end that is itself a root of p into (lo, root) """
    lo, hi = iv.lo, iv.hi
    p, chain = _squarefree(p, logger)
    while sign_at(p, lo) == 0:
        mid = (lo + hi) / 2
        if variations(chain, lo) - variations(chain, mid) == 0:
            lo = mid
        else:
            hi = mid
    return lo, hi


def refine_root(p, iv, digits, logger=LOGGER):
    """
    Rational bisection with exact signs until the interval is narrower than
    10^(-digits)

    @type iv: IsolatingInterval
    @rtype mpf at `digits` precision
    """
    kernel = Kernel.factory("MPMATH", digits)
    width = Fraction(1, 10 ** digits)
    p, _ = _squarefree(p, logger)
    lo, hi = _nonroot_lower_end(p, iv, logger)
    sign_lo = sign_at(p, lo)
    if sign_at(p, hi) == 0:
        return kernel.scalar(hi)
    while hi - lo >= width:
        mid = (lo + hi) / 2
        current = sign_at(p, mid)
        if current == 0:
            return kernel.scalar(mid)
        if current == sign_lo:
            lo = mid
        else:
            hi = mid
    return kernel.scalar((lo + hi) / 2)


def bracket_sign_change(p, value, width=BRACKET_WIDTH):
    """
    Whether p changes sign (or vanishes) on the rational interval of the
    given width centred at value

    @type value: mpf, Fraction or decimal string
    """
    centre = exact_fraction(value)
    half = Fraction(width) / 2
    return sign_at(p, centre - half) * sign_at(p, centre + half) <= 0


def pair_roots_with_embeddings(intervals, embeddings):
    """
    Index of the isolating interval holding each embedding's x_l4

    @type intervals: list of IsolatingInterval
    @type embeddings: list of EmbeddingCandidate
    @rtype list of int or None, one per embedding
    """
    pairs = []
    for embedding in embeddings:
        x = exact_fraction(embedding.coords[L4].x)
        pairs.append(next((i for i, iv in enumerate(intervals)
                           if iv.contains(x)), None))
    return pairs
