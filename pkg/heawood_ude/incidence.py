'''
incidence.py: Holds the Fano plane and its point-line incidence graph
(the Heawood graph)
'''

from collections import deque
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import combinations


class VertexKind(str, Enum):
    POINT = 'P'
    LINE = 'l'


@dataclass(frozen=True, order=True)
class VertexLabel:
    """ One of the 14 vertices P1..P7, l1..l7 """
    kind: VertexKind
    index: int

    def __post_init__(self):
        if not 1 <= self.index <= 7:
            raise ValueError("vertex index out of range: " + str(self.index))

    def __str__(self):
        return self.kind.value + str(self.index)

    @property
    def is_point(self):
        return self.kind is VertexKind.POINT

    @staticmethod
    def parse(name):
        """ 'P3' -> VertexLabel(POINT, 3) """
        return vertex(name)


@lru_cache(maxsize=None)
def vertex(name):
    name = name.strip()
    if len(name) != 2:
        raise ValueError("bad vertex label '" + name + "'")
    return VertexLabel(VertexKind(name[0]), int(name[1]))


POINTS = tuple(VertexLabel(VertexKind.POINT, i) for i in range(1, 8))
LINES = tuple(VertexLabel(VertexKind.LINE, i) for i in range(1, 8))
ALL_LABELS = POINTS + LINES

# lines through the points, fixed by the circle centres of the chain
FANO_LINES = {
    'l1': ('P7', 'P3', 'P1'),
    'l2': ('P2', 'P4', 'P1'),
    'l3': ('P2', 'P5', 'P3'),
    'l4': ('P4', 'P3', 'P6'),
    'l5': ('P5', 'P7', 'P4'),
    'l6': ('P5', 'P6', 'P1'),
    'l7': ('P7', 'P2', 'P6'),
}


@dataclass(frozen=True)
class IncidenceStructure:
    """ Points, lines and the flags joining them """
    lines: dict

    @staticmethod
    def from_names(lines):
        """ Builds a structure from {'l1': ('P7', 'P3', 'P1'), ...} """
        return IncidenceStructure({
            vertex(line): frozenset(vertex(p) for p in points)
            for line, points in lines.items()})

    @property
    def points(self):
        return tuple(sorted(set().union(*self.lines.values())))

    @property
    def flags(self):
        """ Sorted (point, line) pairs """
        return tuple(sorted((point, line)
                            for line, points in self.lines.items()
                            for point in points))

    def points_of(self, line):
        return self.lines[line]

    def lines_of(self, point):
        return frozenset(line for line, points in self.lines.items()
                         if point in points)

    def adjacency(self):
        """ Bipartite adjacency, vertex -> set of neighbours """
        adjacent = {label: set() for label in self.points}
        adjacent.update({line: set() for line in self.lines})
        for point, line in self.flags:
            adjacent[point].add(line)
            adjacent[line].add(point)
        return adjacent

    def to_dict(self):
        return {
            'lines': {str(line): sorted(str(p) for p in points)
                      for line, points in sorted(self.lines.items())},
            'flags': [[str(point), str(line)]
                      for point, line in self.flags],
        }


@dataclass(frozen=True)
class AxiomReport:
    unique_line_per_point_pair: bool
    unique_point_per_line_pair: bool
    three_points_per_line: bool
    three_lines_per_point: bool

    @property
    def all_pass(self):
        return (self.unique_line_per_point_pair and
                self.unique_point_per_line_pair and
                self.three_points_per_line and
                self.three_lines_per_point)

    def to_dict(self):
        return {
            'unique_line_per_point_pair': self.unique_line_per_point_pair,
            'unique_point_per_line_pair': self.unique_point_per_line_pair,
            'three_points_per_line': self.three_points_per_line,
            'three_lines_per_point': self.three_lines_per_point,
        }


def build_heawood_incidence():
    """ The Fano plane labelled as in the construction chain """
    return _HEAWOOD


def verify_fano_axioms(inc):
    """
    Checks the incidence axioms of the projective plane of order two

    @type inc: IncidenceStructure
    @rtype AxiomReport
    @return one boolean per axiom; failures are report entries
    """
    points = inc.points
    lines = tuple(sorted(inc.lines))

    unique_line = all(
        sum(1 for line in lines if {p, q} <= inc.lines[line]) == 1
        for p, q in combinations(points, 2))
    unique_point = all(
        len(inc.lines[a] & inc.lines[b]) == 1
        for a, b in combinations(lines, 2))
    three_points = all(len(inc.lines[line]) == 3 for line in lines)
    three_lines = all(len(inc.lines_of(p)) == 3 for p in points)

    return AxiomReport(unique_line, unique_point, three_points, three_lines)


def girth(inc):
    """ Length of the shortest cycle of the incidence graph, None if none """
    adjacent = inc.adjacency()
    best = None
    for root in sorted(adjacent):
        depth = {root: 0}
        parent = {root: None}
        queue = deque([root])
        while queue:
            current = queue.popleft()
            for nxt in sorted(adjacent[current]):
                if nxt not in depth:
                    depth[nxt] = depth[current] + 1
                    parent[nxt] = current
                    queue.append(nxt)
                elif parent[current] != nxt:
                    cycle = depth[current] + depth[nxt] + 1
                    if best is None or cycle < best:
                        best = cycle
    return best


_HEAWOOD = IncidenceStructure.from_names(FANO_LINES)
