'''
charpoly_tests.py: Holds the characteristic polynomial and Sturm tests
'''

import logging
import unittest
from fractions import Fraction

import yaml
from testfixtures import LogCapture, TempDirectory

from heawood_ude.chain import L4
from heawood_ude.charpoly import (
    COEFFICIENTS_FILE,
    BigPoly,
    IsolatingInterval,
    bracket_sign_change,
    charpoly_xl4,
    count_real_roots,
    eval_exact,
    isolate_real_roots,
    load_coefficients,
    pair_roots_with_embeddings,
    refine_root,
    sign_at,
    sign_at_infinity,
    squarefree_part,
    sturm_chain)
from heawood_ude.exceptions import ChecksumMismatch, NotSquarefree
from heawood_ude.kernels.kernel import Kernel
from heawood_ude.sturm import SturmChains
from heawood_ude.tests.fixtures import polished_tables, reference_tables
from heawood_ude.utilities import exact_fraction, to_decimal_string

T2_MINUS_1 = BigPoly((-1, 0, 1))
T2_MINUS_2 = BigPoly((-2, 0, 1))
# (T - 1)^2 (T + 1)
DOUBLE_ROOT = BigPoly((1, -1, -1, 1))


class TestTranscription(unittest.TestCase):
    """ Holds coefficient table tests """

    def __init__(self, methodName='runTest'):
        super(TestTranscription, self).__init__(methodName)
        self.p = charpoly_xl4()

    def test_degree(self):
        """ 80 coefficients, degree 79 """
        self.assertEqual(self.p.degree, 79)
        self.assertEqual(len(self.p.coefficients), 80)

    def test_known_coefficients(self):
        """ First, second and leading coefficients """
        self.assertEqual(self.p[0], 3348011046054687446588586894387)
        self.assertEqual(self.p[1], 273675328487397647237991825000783)
        self.assertEqual(self.p[79], 82521703002365615643033600000)

    def test_digit_counts(self):
        """ Signs and lengths of the printed coefficients """
        lengths = [len(str(abs(c))) for c in self.p.coefficients]
        self.assertEqual(min(lengths), 29)
        self.assertEqual(max(lengths), 47)
        self.assertEqual(sum(1 for c in self.p.coefficients if c < 0), 23)

    def test_checksum(self):
        """ An altered coefficient is detected """
        with open(COEFFICIENTS_FILE, 'r') as stream:
            table = yaml.safe_load(stream)
        table['coefficients'][40] = str(int(table['coefficients'][40]) + 1)
        with TempDirectory() as directory:
            path = directory.write('charpoly.yaml',
                                   yaml.safe_dump(table).encode('ascii'))
            self.assertRaises(ChecksumMismatch, load_coefficients, path)

    def test_missing_coefficient(self):
        """ A dropped coefficient is detected """
        with open(COEFFICIENTS_FILE, 'r') as stream:
            table = yaml.safe_load(stream)
        del table['coefficients'][-1]
        with TempDirectory() as directory:
            path = directory.write('charpoly.yaml',
                                   yaml.safe_dump(table).encode('ascii'))
            self.assertRaises(ChecksumMismatch, load_coefficients, path)

    def test_leading_zero(self):
        """ A polynomial needs a nonzero leading coefficient """
        self.assertRaises(ValueError, BigPoly, (1, 0))
        self.assertRaises(ValueError, BigPoly, ())


class TestEvaluation(unittest.TestCase):
    """ Holds exact evaluation tests """

    def test_at_zero(self):
        """ p(0) is the constant term """
        self.assertEqual(eval_exact(charpoly_xl4(), 0),
                         3348011046054687446588586894387)

    def test_at_one(self):
        """ p(1) is the sum of the printed coefficients """
        with open(COEFFICIENTS_FILE, 'r') as stream:
            printed = yaml.safe_load(stream)['coefficients']
        self.assertEqual(eval_exact(charpoly_xl4(), 1),
                         sum(int(c) for c in printed))

    def test_trivial_root(self):
        """ T^2 - 1 vanishes at 1 """
        self.assertEqual(eval_exact(T2_MINUS_1, 1), 0)
        self.assertEqual(eval_exact(T2_MINUS_1, Fraction(1, 2)),
                         Fraction(-3, 4))

    def test_sign_matches_value(self):
        """ Homogeneous sign agrees with the rational value """
        p = charpoly_xl4()
        for t in (Fraction(-3, 4), Fraction(-7, 10), Fraction(1, 3), 2):
            value = eval_exact(p, t)
            self.assertEqual(sign_at(p, t), (value > 0) - (value < 0))

    def test_sign_at_infinity(self):
        """ Odd degree, positive leading coefficient """
        self.assertEqual(sign_at_infinity(charpoly_xl4(), 1), 1)
        self.assertEqual(sign_at_infinity(charpoly_xl4(), -1), -1)
        self.assertEqual(sign_at_infinity(T2_MINUS_1, -1), 1)

    def test_exact_fraction(self):
        """ Binary scalars convert with their sign """
        kernel = Kernel.factory("MPMATH", 30)
        self.assertEqual(exact_fraction(kernel.scalar('-1.5')),
                         Fraction(-3, 2))
        self.assertEqual(exact_fraction(kernel.scalar(Fraction(-3, 1024))),
                         Fraction(-3, 1024))
        self.assertEqual(exact_fraction(kernel.scalar(-6)), -6)
        self.assertEqual(exact_fraction(kernel.scalar(0)), 0)
        self.assertEqual(exact_fraction(kernel.scalar(5)), 5)
        self.assertRaises(ValueError, exact_fraction,
                          kernel.ctx.mpf('-inf'))

    def test_bracket_negative_root(self):
        """ Brackets around negative values stay on the negative axis """
        kernel = Kernel.factory("MPMATH", 30)
        # simple root at -1, double root at 1
        self.assertTrue(bracket_sign_change(DOUBLE_ROOT, -1))
        self.assertTrue(bracket_sign_change(DOUBLE_ROOT, kernel.scalar(-1)))
        self.assertFalse(bracket_sign_change(DOUBLE_ROOT, kernel.scalar(1)))
        self.assertTrue(bracket_sign_change(T2_MINUS_2, -kernel.sqrt(2)))


class TestSturm(unittest.TestCase):
    """ Holds real root counting tests """

    def __init__(self, methodName='runTest'):
        super(TestSturm, self).__init__(methodName)
        self.p = charpoly_xl4()

    def test_eleven_in_window(self):
        """ Eleven real roots in (-4, 4) """
        self.assertEqual(count_real_roots(self.p, -4, 4), 11)

    def test_eleven_overall(self):
        """ Eleven real roots over the whole line """
        self.assertEqual(count_real_roots(self.p), 11)
        self.assertEqual(count_real_roots(self.p, float('-inf'),
                                          float('inf')), 11)

    def test_geometric_range(self):
        """ No real root outside [-1, 3] """
        self.assertEqual(count_real_roots(self.p, None, -1), 0)
        self.assertEqual(count_real_roots(self.p, 3, None), 0)

    def test_table_window(self):
        """ Roots in (-0.8, -0.6), as many as tabled x_l4 values """
        lo, hi = Fraction(-4, 5), Fraction(-3, 5)
        expected = sum(1 for table in reference_tables().values()
                       if lo < Fraction(table[L4][0]) <= hi)
        self.assertEqual(expected, 7)
        self.assertEqual(count_real_roots(self.p, lo, hi), expected)

    def test_trivial_count(self):
        """ T^2 - 1 over (-2, 2) """
        self.assertEqual(count_real_roots(T2_MINUS_1, -2, 2), 2)
        self.assertEqual(count_real_roots(T2_MINUS_1, -1, 1), 1)

    def test_bad_interval(self):
        """ lo must be below hi """
        self.assertRaises(ValueError, count_real_roots, T2_MINUS_1, 2, -2)

    def test_squarefree(self):
        """ The last chain element is a nonzero constant """
        chain = sturm_chain(self.p)
        self.assertEqual(len(chain[-1]), 1)
        self.assertNotEqual(chain[-1][0], 0)

    def test_not_squarefree(self):
        """ A double root is reported """
        try:
            sturm_chain(DOUBLE_ROOT)
            self.fail("double root not detected")
        except NotSquarefree as err:
            self.assertEqual(err.gcd_degree, 1)

    def test_squarefree_fallback(self):
        """ Counting falls back to the squarefree part """
        with LogCapture() as log:
            self.assertEqual(count_real_roots(DOUBLE_ROOT, -2, 2), 2)
        self.assertTrue(any(r.levelno == logging.WARNING
                            for r in log.records))
        self.assertEqual(squarefree_part(DOUBLE_ROOT), T2_MINUS_1)

    def test_cache(self):
        """ Chains are built once and shared """
        first = SturmChains().get(T2_MINUS_2.coefficients)
        second = SturmChains().get(T2_MINUS_2.coefficients)
        self.assertIs(first, second)


class TestIsolation(unittest.TestCase):
    """ Holds root isolation and refinement tests """

    @classmethod
    def setUpClass(cls):
        cls.p = charpoly_xl4()
        cls.intervals = isolate_real_roots(cls.p)
        cls.roots = [refine_root(cls.p, iv, 20) for iv in cls.intervals]

    def test_eleven_intervals(self):
        """ One interval per real root, ascending and disjoint """
        self.assertEqual(len(self.intervals), 11)
        for a, b in zip(self.intervals, self.intervals[1:]):
            self.assertLessEqual(a.hi, b.lo)
        for iv in self.intervals:
            self.assertEqual(count_real_roots(self.p, iv.lo, iv.hi), 1)

    def test_sqrt2(self):
        """ Roots of T^2 - 2 """
        intervals = isolate_real_roots(T2_MINUS_2)
        self.assertEqual(len(intervals), 2)
        self.assertTrue(intervals[0].contains(Fraction('-1.4142')))
        self.assertTrue(intervals[1].contains(Fraction('1.4142')))
        root = refine_root(T2_MINUS_2, intervals[1], 30)
        self.assertEqual(to_decimal_string(Kernel.factory("MPMATH", 30), root),
                         '1.41421356237309504880168872421')

    def test_table_one(self):
        """ The smallest root is x_l4 of table 1 """
        x = reference_tables()[1][L4][0]
        self.assertTrue(self.intervals[0].contains(Fraction(x)))
        kernel = Kernel.factory("MPMATH", 20)
        self.assertLess(abs(self.roots[0] - kernel.scalar(x)), 1e-14)

    def test_distinct(self):
        """ Refined roots are at least 1e-4 apart """
        for a, b in zip(self.roots, self.roots[1:]):
            self.assertGreater(b - a, 1e-4)

    def test_bracket(self):
        """ A width 1e-20 bracket around a refined root changes sign """
        root = refine_root(self.p, self.intervals[3], 30)
        self.assertTrue(bracket_sign_change(self.p, root))
        self.assertFalse(bracket_sign_change(self.p, root + 1e-5))

    def test_pairing(self):
        """ The polished tables land in eleven distinct intervals """
        pairs = pair_roots_with_embeddings(self.intervals,
                                           polished_tables(60))
        self.assertEqual(sorted(pairs), list(range(11)))
        for e in polished_tables(60):
            self.assertTrue(bracket_sign_change(self.p, e.coords[L4].x))

    def test_interval_invariant(self):
        """ Empty intervals are rejected """
        self.assertRaises(ValueError, IsolatingInterval,
                          Fraction(1), Fraction(1))


if __name__ == '__main__':
    unittest.main()
