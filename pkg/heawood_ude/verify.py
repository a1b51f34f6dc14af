'''
verify.py: Holds the certification of embeddings

Every check recomputes distances from the coordinates alone, so a
certificate does not depend on how the solver reached the candidate.
'''

import logging
import os
from dataclasses import dataclass

from heawood_ude.chain import DEPENDENT, L4, L5, P4
from heawood_ude.charpoly import bracket_sign_change, charpoly_xl4
from heawood_ude.config import DATA_DIR, load_yaml
from heawood_ude.geom import (
    distance,
    distance_squared,
    point_segment_distance)
from heawood_ude.incidence import build_heawood_incidence, vertex
from heawood_ude.kernels.kernel import Kernel
from heawood_ude.utilities import to_decimal_string

LOGGER = logging.getLogger(__name__)

TABLES_FILE = os.path.join(DATA_DIR, 'reference_tables.yaml')
TABLE_TOLERANCE = 1e-10


@dataclass(frozen=True)
class Certificate:
    """
    @type max_flag_residual: largest |d(P, l)^2 - 1| over the 21 flags
    @type worst_flag: (VertexLabel, VertexLabel) attaining it
    @type collinearity_residual: largest deviation of P4 from the
          midpoint of l4 and l5
    @type charpoly_bracket_ok: bool, x_l4 is bracketed by a sign change
          of the characteristic polynomial
    @type regularity_margin: smallest distance from a vertex to an edge
          it is not an end of
    @type precision: int
    @type matched_table: int 1..11 or None
    """
    max_flag_residual: object
    worst_flag: tuple
    collinearity_residual: object
    charpoly_bracket_ok: bool
    regularity_margin: object
    precision: int
    matched_table: int = None

    @property
    def threshold(self):
        """ 10^(4 - precision), as a scalar of that precision """
        return Kernel.factory("MPMATH", self.precision).threshold(4)

    @property
    def passes(self):
        return bool(self.max_flag_residual < self.threshold and
                    self.collinearity_residual < self.threshold and
                    self.charpoly_bracket_ok and
                    self.regularity_margin > self.threshold)

    def to_dict(self, kernel):
        return {
            'pass': self.passes,
            'max_flag_residual': to_decimal_string(kernel,
                                                   self.max_flag_residual),
            'worst_flag': [str(label) for label in self.worst_flag],
            'collinearity_residual': to_decimal_string(
                kernel, self.collinearity_residual),
            'charpoly_bracket_ok': self.charpoly_bracket_ok,
            'regularity_margin': to_decimal_string(kernel,
                                                   self.regularity_margin),
            'precision': self.precision,
            'matched_table': self.matched_table,
        }


@dataclass(frozen=True)
class CertificationSummary:
    certificates: tuple
    bijection: bool

    @property
    def passed(self):
        return sum(1 for c in self.certificates if c.passes)

    @property
    def all_pass(self):
        return self.passed == len(self.certificates) and self.bijection


def load_reference_tables(path=None):
    """
    The published tables of the eleven solutions

    @rtype dict int -> {VertexLabel: (x, y) decimal strings}
    """
    data = load_yaml(path or TABLES_FILE)
    return {int(index): {vertex(name): (str(xy[0]), str(xy[1]))
                         for name, xy in table.items()}
            for index, table in data['tables'].items()}


def table_accuracy(index, path=None):
    """ How close the printed digits of a table are to the exact solution """
    accuracy = load_yaml(path or TABLES_FILE).get('accuracy', {})
    return float(accuracy.get(index, accuracy.get('default',
                                                  TABLE_TOLERANCE)))


def flag_residuals(e, inc=None):
    """
    @type e: EmbeddingCandidate
    @type inc: IncidenceStructure, defaults to the Heawood incidence
    @rtype list of ((point, line), |d^2 - 1|)
    """
    inc = inc or build_heawood_incidence()
    return [(flag, abs(distance_squared(e.coords[flag[0]],
                                        e.coords[flag[1]]) - 1))
            for flag in inc.flags]


def collinearity_residual(e):
    p4, l4, l5 = e.coords[P4], e.coords[L4], e.coords[L5]
    return max(abs(2 * p4.x - l4.x - l5.x),
               abs(2 * p4.y - l4.y - l5.y)) / 2


def regularity_check(e, inc=None):
    """
    Smallest distance from a vertex to the segment of an edge the vertex is
    not an end of; positive means no vertex lies on a foreign edge
    """
    inc = inc or build_heawood_incidence()
    kernel = e.kernel
    margin = None
    for label, p in e.coords.items():
        for a, b in inc.flags:
            if label in (a, b):
                continue
            d = point_segment_distance(kernel, p, e.coords[a], e.coords[b])
            if margin is None or d < margin:
                margin = d
    return margin


def minimum_vertex_distance(e):
    """ Smallest distance between two of the 14 vertices """
    kernel = e.kernel
    points = list(e.coords.values())
    return min(distance(kernel, a, b)
               for i, a in enumerate(points) for b in points[i + 1:])


def match_table(e, tables, tol=TABLE_TOLERANCE):
    """
    Index of the table nearest to e, measured as the largest difference
    over the listed coordinates, or None when even that one is further
    than tol
    """
    kernel = e.kernel
    best, nearest = None, None
    for index in sorted(tables):
        deviation = max(max(abs(e.coords[label].x - kernel.scalar(x)),
                            abs(e.coords[label].y - kernel.scalar(y)))
                        for label, (x, y) in tables[index].items())
        if nearest is None or deviation < nearest:
            best, nearest = index, deviation
    if nearest is None or nearest > tol:
        return None
    return best


def certify(e, p=None, inc=None, tables=None):
    """
    @type e: EmbeddingCandidate
    @type p: BigPoly, defaults to the characteristic polynomial of x_l4
    @type inc: IncidenceStructure, defaults to the Heawood incidence
    @type tables: reference tables, defaults to the published ones
    @rtype Certificate
    """
    p = p or charpoly_xl4()
    inc = inc or build_heawood_incidence()
    tables = load_reference_tables() if tables is None else tables
    worst_flag, worst = max(flag_residuals(e, inc), key=lambda fr: fr[1])
    return Certificate(max_flag_residual=worst,
                       worst_flag=worst_flag,
                       collinearity_residual=collinearity_residual(e),
                       charpoly_bracket_ok=bracket_sign_change(
                           p, e.coords[L4].x),
                       regularity_margin=regularity_check(e, inc),
                       precision=e.precision,
                       matched_table=match_table(e, tables))


def certify_all(embeddings, p=None, inc=None, tables=None, logger=LOGGER):
    """
    Certifies every embedding and checks that the matched tables are
    pairwise distinct and, for a full set, cover every table

    @rtype CertificationSummary
    """
    logger.info('Certifying ' + str(len(embeddings)) + ' embeddings..')
    tables = load_reference_tables() if tables is None else tables
    certificates = []
    for i, e in enumerate(embeddings):
        certificate = certify(e, p, inc, tables)
        if not certificate.passes:
            logger.error('embedding ' + str(i + 1) + ' fails certification'
                         ' (worst flag ' +
                         '-'.join(str(v) for v in certificate.worst_flag) +
                         ')')
        certificates.append(certificate)

    matched = [c.matched_table for c in certificates
               if c.matched_table is not None]
    bijection = len(set(matched)) == len(matched)
    if len(embeddings) == len(tables):
        bijection = bijection and set(matched) == set(tables)
    if not bijection:
        logger.error('table matching is not one-to-one: ' + str(matched))
    logger.info('..passed=' + str(sum(c.passes for c in certificates)) +
                ' total=' + str(len(certificates)))
    return CertificationSummary(tuple(certificates), bijection)


def dependent_deviation(e, table):
    """ Largest coordinate difference to a table, over DEPENDENT vertices """
    kernel = e.kernel
    return max(max(abs(e.coords[label].x - kernel.scalar(table[label][0])),
                   abs(e.coords[label].y - kernel.scalar(table[label][1])))
               for label in DEPENDENT)
