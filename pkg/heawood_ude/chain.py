'''
chain.py: Holds the constraint system of the embedding: the pinned 6-cycle,
the collinearity of l4, P4 and l5, the ruler-and-compass construction of
the remaining vertices and the closing unit distance P1 ~ l1
'''

from dataclasses import dataclass, field
from itertools import product

from heawood_ude.exceptions import ChainBroken, GeometryError
from heawood_ude.geom import (
    BranchChoice,
    Point2,
    circle_circle_intersect,
    midpoint,
    point,
    reflect_across_horizontal)
from heawood_ude.incidence import ALL_LABELS, vertex
from heawood_ude.kernels.kernel import Kernel
from heawood_ude.utilities import to_decimal_string

P1, P2, P3, P4, P5, P6, P7 = (vertex('P' + str(i)) for i in range(1, 8))
L1, L2, L3, L4, L5, L6, L7 = (vertex('l' + str(i)) for i in range(1, 8))

# the 6-cycle P5 l5 P7 l7 P2 l3, placed as a 1 x 2 rectangle
FIXED_CONFIGURATION = {
    P5: (0, 0),
    L5: (1, 0),
    P7: (1, 1),
    L7: (1, 2),
    P2: (0, 2),
    L3: (0, 1),
}
FIXED_CYCLE = (P5, L5, P7, L7, P2, L3)

# (vertex, first centre, second centre), in construction order
CONSTRUCTION_STEPS = (
    (P3, L3, L4),
    (P6, L7, L4),
    (L2, P2, P4),
    (L1, P7, P3),
    (L6, P5, P6),
    (P1, L2, L6),
)
CLOSURE = (P1, L1)

# Newton unknowns, two coordinates each
DEPENDENT = (L4, P4, P3, P6, L2, L1, L6, P1)


def _flag(a, b):
    return (a, b) if a.is_point else (b, a)


@dataclass(frozen=True)
class BranchVector:
    """ One bit per construction step, in CONSTRUCTION_STEPS order """
    bits: tuple

    def __post_init__(self):
        if len(self.bits) != len(CONSTRUCTION_STEPS):
            raise ValueError("branch vector needs " +
                             str(len(CONSTRUCTION_STEPS)) + " bits")
        object.__setattr__(self, 'bits',
                           tuple(BranchChoice(int(b)) for b in self.bits))

    @staticmethod
    def all():
        """ The 64 branch vectors in lexicographic order """
        return tuple(BranchVector(bits)
                     for bits in product((0, 1), repeat=6))

    def __str__(self):
        return ''.join(str(int(b)) for b in self.bits)


@dataclass(frozen=True)
class Equation:
    """
    One polynomial equation of the system

    kind 'distance': |a - b|^2 - radius^2 (operands a, b)
    kind 'midpoint': P4 - (l4 + l5) / 2 along one axis (operands P4, l4, l5)
    kind 'fixed':    a unit distance of the pinned rectangle
    """
    id: str
    kind: str
    operands: tuple
    flags: tuple = ()
    radius: int = 1
    axis: str = None

    def residual(self, coords):
        if self.kind == 'midpoint':
            p4, a, b = (coords[label] for label in self.operands)
            k = self.axis
            return getattr(p4, k) - (getattr(a, k) + getattr(b, k)) / 2
        a, b = (coords[label] for label in self.operands)
        return (a - b).norm_squared() - self.radius ** 2

    def gradient(self, coords):
        """ Partial derivatives as {(label, 'x'|'y'): value} """
        if self.kind == 'midpoint':
            p4, a, b = self.operands
            return {(p4, self.axis): 1,
                    (a, self.axis): -0.5,
                    (b, self.axis): -0.5}
        a, b = self.operands
        delta = coords[a] - coords[b]
        return {(a, 'x'): 2 * delta.x, (a, 'y'): 2 * delta.y,
                (b, 'x'): -2 * delta.x, (b, 'y'): -2 * delta.y}


def _build_registry():
    equations = [
        # with P4 the exact midpoint, both halves are unit distances
        Equation('l4-l5', 'distance', (L4, L5),
                 flags=(_flag(P4, L4), _flag(P4, L5)), radius=2),
        Equation('P4-midpoint-x', 'midpoint', (P4, L4, L5), axis='x'),
        Equation('P4-midpoint-y', 'midpoint', (P4, L4, L5), axis='y'),
    ]
    for target, first, second in CONSTRUCTION_STEPS:
        for centre in (first, second):
            equations.append(Equation(
                str(target) + '-' + str(centre), 'distance', (target, centre),
                flags=(_flag(target, centre),)))
    equations.append(Equation('P1-l1', 'distance', CLOSURE,
                              flags=(_flag(*CLOSURE),)))
    for i, label in enumerate(FIXED_CYCLE):
        nxt = FIXED_CYCLE[(i + 1) % len(FIXED_CYCLE)]
        equations.append(Equation(str(label) + '-' + str(nxt), 'fixed',
                                  (label, nxt), flags=(_flag(label, nxt),)))
    return tuple(equations)


_REGISTRY = _build_registry()


def equation_registry():
    """
    Every constraint of the system: the 16 chain equations in construction
    order followed by the 6 unit distances of the pinned rectangle

    @rtype tuple of Equation
    """
    return _REGISTRY


def chain_equations():
    """ The square system: 16 equations in the 16 DEPENDENT coordinates """
    return tuple(eq for eq in _REGISTRY if eq.kind != 'fixed')


def registry_flags():
    return frozenset(f for eq in _REGISTRY for f in eq.flags)


@dataclass(frozen=True)
class EmbeddingCandidate:
    """
    14 labelled points plus how they were obtained

    @type coords: dict VertexLabel -> Point2
    @type theta: scalar, parameter placing l4
    @type branch: BranchVector
    @type closure: scalar, residual of the closing unit distance
    @type precision: int, working digits of every coordinate
    """
    coords: dict
    theta: object
    branch: BranchVector
    closure: object
    precision: int
    newton_steps: tuple = field(default=(), compare=False)

    @property
    def kernel(self):
        return Kernel.factory("MPMATH", self.precision)

    def dependent_vector(self):
        return [c for label in DEPENDENT
                for c in (self.coords[label].x, self.coords[label].y)]

    def reflected(self, y0=1):
        """
        Mirror copy across the horizontal line y = y0. It is again a unit
        distance embedding, but the pinned vertices move (y0 = 1 swaps the
        places of P5/P2 and l5/l7).
        """
        kernel = self.kernel
        y0 = kernel.scalar(y0)
        coords = {label: reflect_across_horizontal(p, y0)
                  for label, p in self.coords.items()}
        return EmbeddingCandidate(coords, self.theta, self.branch,
                                  self.closure, self.precision)

    def to_dict(self):
        kernel = self.kernel
        return {
            'theta': to_decimal_string(kernel, self.theta),
            'branch': [int(b) for b in self.branch.bits],
            'precision': self.precision,
            'vertices': {
                str(label): [to_decimal_string(kernel, self.coords[label].x),
                             to_decimal_string(kernel, self.coords[label].y)]
                for label in ALL_LABELS},
            'closure': to_decimal_string(kernel, self.closure),
        }

    @staticmethod
    def from_dict(data):
        kernel = Kernel.factory("MPMATH", int(data['precision']))
        coords = {vertex(name): point(kernel, xy[0], xy[1])
                  for name, xy in data['vertices'].items()}
        return EmbeddingCandidate(coords,
                                  kernel.scalar(data['theta']),
                                  BranchVector(tuple(data['branch'])),
                                  kernel.scalar(data['closure']),
                                  kernel.digits)


def place_l4(theta, kernel=None):
    """ l4 on the radius 2 circle around l5 = (1, 0) """
    if kernel is None:
        kernel = Kernel.factory("MPMATH")
    theta = kernel.scalar(theta)
    return Point2(1 + 2 * kernel.cos(theta), 2 * kernel.sin(theta))


def theta_of(l4, kernel):
    """ Inverse of place_l4, in [0, 2 pi) """
    theta = kernel.atan2(l4.y / 2, (l4.x - 1) / 2)
    if theta < 0:
        theta += 2 * kernel.pi()
    return theta


def _construct(kernel, theta, branch):
    coords = {label: point(kernel, x, y)
              for label, (x, y) in FIXED_CONFIGURATION.items()}
    coords[L4] = place_l4(theta, kernel)
    coords[P4] = midpoint(coords[L4], coords[L5])
    for bit, (target, first, second) in zip(branch.bits,
                                            CONSTRUCTION_STEPS):
        try:
            coords[target] = circle_circle_intersect(
                coords[first], 1, coords[second], 1, bit, kernel=kernel)
        except GeometryError as err:
            raise ChainBroken(target, err)
    return coords


def _closure(coords):
    p1, l1 = (coords[label] for label in CLOSURE)
    return (p1 - l1).norm_squared() - 1


def build_chain(theta, branch, precision):
    """
    Constructs all 14 vertices for one parameter and branch vector

    @type theta: number or decimal string
    @type branch: BranchVector
    @type precision: int
    @rtype EmbeddingCandidate
    @raise ChainBroken: naming the first vertex that could not be placed
    """
    kernel = Kernel.factory("MPMATH", precision)
    theta = kernel.scalar(theta)
    coords = _construct(kernel, theta, branch)
    return EmbeddingCandidate(coords, theta, branch, _closure(coords),
                              kernel.digits)


def closure_residual(candidate):
    """ |P1 - l1|^2 - 1 of a fully constructed candidate """
    return _closure(candidate.coords)


def closure_on_grid(thetas, branch):
    """
    Double precision closure residuals for an array of parameters, NaN
    wherever the chain breaks
    """
    kernel = Kernel.factory("NUMPY")
    return _closure(_construct(kernel, kernel.scalar(thetas), branch))


def infer_branch(coords, kernel):
    """ Branch bits realised by a set of coordinates """
    bits = []
    for target, first, second in CONSTRUCTION_STEPS:
        direction = coords[second] - coords[first]
        offset = coords[target] - coords[first]
        cross = direction.x * offset.y - direction.y * offset.x
        bits.append(BranchChoice.LEFT if cross >= 0 else BranchChoice.RIGHT)
    return BranchVector(tuple(bits))


def candidate_from_coordinates(coords, precision):
    """
    Candidate from externally supplied dependent coordinates (published
    tables, Newton iterates); the pinned vertices are filled in

    @type coords: dict VertexLabel -> (x, y) as numbers or decimal strings
    """
    kernel = Kernel.factory("MPMATH", precision)
    full = {label: point(kernel, x, y)
            for label, (x, y) in FIXED_CONFIGURATION.items()}
    for label, xy in coords.items():
        if label in FIXED_CONFIGURATION:
            continue
        if isinstance(xy, Point2):
            xy = (xy.x, xy.y)
        full[label] = point(kernel, *xy)
    return EmbeddingCandidate(full,
                              theta_of(full[L4], kernel),
                              infer_branch(full, kernel),
                              _closure(full),
                              kernel.digits)
