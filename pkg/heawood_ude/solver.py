'''
solver.py: Finds the real solutions of the chain system

The dependent vertices are explicit functions of the parameter theta and
the branch bits, so only the closing unit distance is left: its sign
changes are bracketed on a double precision grid for each of the 64 branch
vectors, bisected at moderate precision and then polished with Newton's
method on the full square system of 16 equations.
'''

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from heawood_ude.chain import (
    DEPENDENT,
    L4,
    L5,
    P4,
    BranchVector,
    EmbeddingCandidate,
    build_chain,
    candidate_from_coordinates,
    chain_equations,
    closure_on_grid,
    theta_of,
    _closure)
from heawood_ude.exceptions import (
    ChainBroken,
    LostBracket,
    NoConvergence,
    SingularJacobian)
from heawood_ude.geom import midpoint, to_precision
from heawood_ude.kernels.kernel import Kernel
from heawood_ude.utilities import sign
from heawood_ude.verify import minimum_vertex_distance, regularity_check

LOGGER = logging.getLogger(__name__)

EXPECTED_SOLUTIONS = 11
SUBDIVISIONS = 16


@dataclass(frozen=True)
class Bracket:
    """ Adjacent grid samples of one branch vector with opposite signs """
    branch: BranchVector
    theta_lo: float
    theta_hi: float
    residual_lo: float
    residual_hi: float

    def __post_init__(self):
        if sign(self.residual_lo) * sign(self.residual_hi) >= 0:
            raise ValueError("bracket residuals must have strictly "
                             "opposite signs")


def theta_grid(config):
    """ Sample parameters; the full circle is closed so 2 pi wraps to 0 """
    if config.theta_range is None:
        return np.linspace(0.0, 2 * np.pi, config.grid_points + 1)
    lo, hi = config.theta_range
    return np.linspace(lo, hi, config.grid_points)


def sign_changes(thetas, values, branch):
    """ Brackets between finite adjacent samples of opposite sign """
    finite = np.isfinite(values)
    signs = np.where(values >= 0, 1, -1)
    changes = np.nonzero(finite[:-1] & finite[1:] &
                         (signs[:-1] != signs[1:]))[0]
    brackets = []
    for i in changes:
        if values[i] == 0 or values[i + 1] == 0:
            # a sample sitting on a root; widen to the neighbours
            continue
        brackets.append(Bracket(branch,
                                float(thetas[i]), float(thetas[i + 1]),
                                float(values[i]), float(values[i + 1])))
    return brackets


def sweep(config, logger=LOGGER):
    """
    Samples the closure residual for every branch vector

    @type config: SolveConfig
    @rtype list of Bracket
    @return every adjacent same-branch sample pair with a sign change,
            ordered by branch vector then theta
    """
    logger.info('Sweeping closure residual over ' +
                str(config.grid_points) + ' samples x 64 branches..')
    thetas = theta_grid(config)
    brackets = []
    for branch in BranchVector.all():
        values = closure_on_grid(thetas, branch)
        found = sign_changes(thetas, values, branch)
        zeros = np.nonzero(values == 0)[0]
        for i in zeros:
            if 0 < i < len(thetas) - 1 and \
                    np.isfinite(values[i - 1]) and \
                    np.isfinite(values[i + 1]) and \
                    values[i - 1] * values[i + 1] < 0:
                found.append(Bracket(branch,
                                     float(thetas[i - 1]),
                                     float(thetas[i + 1]),
                                     float(values[i - 1]),
                                     float(values[i + 1])))
        if found:
            logger.debug(' - branch ' + str(branch) + ': ' +
                         str(len(found)) + ' sign changes')
        brackets.extend(sorted(found, key=lambda b: b.theta_lo))
    logger.info('..' + str(len(brackets)) + ' brackets found')
    return brackets


def _residual_at(theta, branch, digits):
    try:
        return build_chain(theta, branch, digits)
    except ChainBroken as err:
        raise LostBracket("chain breaks inside the bracket: " + str(err))


def refine_bracket(bracket, digits, logger=LOGGER):
    """
    Bisects a bracket at `digits` precision

    @type bracket: Bracket
    @type digits: int
    @rtype EmbeddingCandidate
    @return chain candidate at the midpoint of the final interval, whose
            width and closure residual are both below 10^(-digits/2)
    @raise LostBracket: the sign change vanished or is a jump, not a root
    """
    kernel = Kernel.factory("MPMATH", digits)
    target = kernel.scalar(10) ** (-kernel.scalar(digits) / 2)
    floor = kernel.threshold(3)
    branch = bracket.branch

    lo = kernel.scalar(bracket.theta_lo)
    hi = kernel.scalar(bracket.theta_hi)
    sign_lo = sign(_residual_at(lo, branch, digits).closure)
    sign_hi = sign(_residual_at(hi, branch, digits).closure)
    if sign_lo * sign_hi > 0:
        raise LostBracket("no sign change at " + str(digits) + " digits")

    while True:
        mid = (lo + hi) / 2
        candidate = _residual_at(mid, branch, digits)
        if hi - lo < target:
            if abs(candidate.closure) < target:
                return candidate
            if hi - lo < floor:
                raise LostBracket(
                    "residual does not vanish near theta=" +
                    kernel.ctx.nstr(mid, 12) + " (jump between branches)")
        current = sign(candidate.closure)
        if current == 0:
            return candidate
        if current == sign_lo:
            lo = mid
        else:
            hi = mid


def _jacobian(kernel, equations, coords, column):
    matrix = kernel.ctx.matrix(len(equations), len(column))
    for row, equation in enumerate(equations):
        for key, value in equation.gradient(coords).items():
            if key in column:
                matrix[row, column[key]] = kernel.scalar(value)
    return matrix


def newton_polish(candidate, digits, max_iter=100, logger=LOGGER):
    """
    Newton's method on the square system in the 16 dependent coordinates

    @type candidate: EmbeddingCandidate
    @param candidate: seed, close enough to a solution (closure < 1e-10)
    @type digits: int
    @param digits: working precision of the iteration
    @rtype EmbeddingCandidate
    @return polished candidate with every equation below 10^(4-digits);
            newton_steps holds the max-norm of each step taken
    @raise SingularJacobian: condition estimate above 10^(digits/2)
    @raise NoConvergence: after max_iter steps
    """
    kernel = Kernel.factory("MPMATH", digits)
    ctx = kernel.ctx
    equations = chain_equations()
    unknowns = [(label, axis) for label in DEPENDENT for axis in 'xy']
    column = {key: i for i, key in enumerate(unknowns)}
    coords = {label: to_precision(p, kernel)
              for label, p in candidate.coords.items()}
    tol = kernel.threshold(4)
    max_condition = ctx.mpf(10) ** (ctx.mpf(digits) / 2)

    steps = []
    iteration = 0
    while True:
        residuals = [equation.residual(coords) for equation in equations]
        if max(abs(r) for r in residuals) < tol:
            break
        if iteration == max_iter:
            raise NoConvergence(
                "Newton did not converge in " + str(max_iter) +
                " iterations (residual " +
                ctx.nstr(max(abs(r) for r in residuals), 5) + ")")
        iteration += 1

        jacobian = _jacobian(kernel, equations, coords, column)
        try:
            condition = ctx.cond(jacobian)
        except ZeroDivisionError:
            raise SingularJacobian("Jacobian is numerically singular")
        if condition > max_condition:
            raise SingularJacobian("Jacobian condition estimate " +
                                   ctx.nstr(condition, 5))
        delta = ctx.lu_solve(jacobian, ctx.matrix(residuals))

        values = {key: getattr(coords[key[0]], key[1]) - delta[i]
                  for i, key in enumerate(unknowns)}
        for label in DEPENDENT:
            coords[label] = type(coords[label])(values[(label, 'x')],
                                                values[(label, 'y')])
        step = ctx.norm(delta, ctx.inf)
        steps.append(step)
        logger.debug(' - Newton step ' + str(iteration) + ': ' +
                     ctx.nstr(step, 5))

    coords[P4] = midpoint(coords[L4], coords[L5])
    return EmbeddingCandidate(coords,
                              theta_of(coords[L4], kernel),
                              candidate.branch,
                              _closure(coords),
                              digits,
                              newton_steps=tuple(steps))


def _subdivide(bracket, digits):
    """ Re-brackets a lost bracket on a finer grid at refine precision """
    kernel = Kernel.factory("MPMATH", digits)
    lo = kernel.scalar(bracket.theta_lo)
    width = (kernel.scalar(bracket.theta_hi) - lo) / SUBDIVISIONS
    samples = []
    for i in range(SUBDIVISIONS + 1):
        theta = lo + i * width
        try:
            samples.append((theta, build_chain(theta, bracket.branch,
                                               digits).closure))
        except ChainBroken:
            samples.append((theta, None))
    brackets = []
    for (t0, f0), (t1, f1) in zip(samples, samples[1:]):
        if f0 is not None and f1 is not None and sign(f0) * sign(f1) < 0:
            brackets.append(Bracket(bracket.branch, float(t0), float(t1),
                                    float(f0), float(f1)))
    return brackets


def _polish(candidate, config, logger):
    for digits in config.polish_stages:
        candidate = newton_polish(candidate, digits,
                                  config.newton_max_iter, logger)
    return candidate


def process_bracket(bracket, config, logger=LOGGER):
    """
    Refines and polishes one bracket

    @rtype list of EmbeddingCandidate
    @return the solutions found (none, one, or more after subdividing a
            lost bracket)
    """
    digits = config.refine_digits
    try:
        pending = [refine_bracket(bracket, digits, logger)]
    except LostBracket as err:
        logger.warning("Lost bracket on branch " + str(bracket.branch) +
                       " at theta=" + repr(bracket.theta_lo) + ": " +
                       str(err) + ". Subdividing..")
        pending = []
        for sub in _subdivide(bracket, digits):
            try:
                pending.append(refine_bracket(sub, digits, logger))
            except LostBracket as sub_err:
                logger.warning("..skipped sub-bracket at theta=" +
                               repr(sub.theta_lo) + ": " + str(sub_err))

    solutions = []
    for candidate in pending:
        try:
            solutions.append(_polish(candidate, config, logger))
        except (SingularJacobian, NoConvergence) as err:
            logger.warning("Polishing failed on branch " +
                           str(bracket.branch) + ": " + str(err))
    return solutions


def _process_remote(args):
    """ Process pool entry point; candidates cross as chain-schema dicts """
    bracket, config = args
    results = []
    for candidate in process_bracket(bracket, config):
        results.append((candidate.to_dict(),
                        [str(step) for step in candidate.newton_steps]))
    return results


def _from_remote(data, steps):
    candidate = EmbeddingCandidate.from_dict(data)
    kernel = candidate.kernel
    return EmbeddingCandidate(candidate.coords, candidate.theta,
                              candidate.branch, candidate.closure,
                              candidate.precision,
                              tuple(kernel.scalar(s) for s in steps))


def _sort_key(candidate):
    l4 = candidate.coords[L4]
    return (l4.x, l4.y, str(candidate.branch))


def dedupe(candidates, tol):
    """
    Keeps one representative of candidates whose 28 coordinates agree
    within tol, the first in (x_l4, y_l4) order
    """
    unique = []
    for candidate in sorted(candidates, key=_sort_key):
        vector = [c for p in candidate.coords.values() for c in (p.x, p.y)]
        labels = list(candidate.coords)
        duplicate = False
        for kept in unique:
            other = [c for label in labels
                     for c in (kept.coords[label].x, kept.coords[label].y)]
            if max(abs(a - b) for a, b in zip(vector, other)) <= tol:
                duplicate = True
                break
        if not duplicate:
            unique.append(candidate)
    return unique


def reject_degenerate(candidates, logger=LOGGER):
    """
    Drops roots of the closure residual that are not embeddings: two
    vertices coincide or a vertex lies on an edge it is not an end of

    @rtype list of EmbeddingCandidate
    """
    kept = []
    for candidate in candidates:
        bound = candidate.kernel.threshold(4)
        margin = min(minimum_vertex_distance(candidate),
                     regularity_check(candidate))
        if margin <= bound:
            logger.warning('Rejecting degenerate solution on branch ' +
                           str(candidate.branch) + ' at x_l4=' +
                           candidate.kernel.ctx.nstr(
                               candidate.coords[L4].x, 15) +
                           ' (margin ' + candidate.kernel.ctx.nstr(
                               margin, 5) + ')')
            continue
        kept.append(candidate)
    return kept


def solve_all(config, logger=LOGGER):
    """
    sweep -> refine -> polish -> reject degenerate -> dedupe

    @type config: SolveConfig
    @rtype list of EmbeddingCandidate
    @return the distinct solutions sorted by (x_l4, y_l4); eleven expected
    """
    brackets = sweep(config, logger)

    logger.info('Refining ' + str(len(brackets)) + ' brackets at ' +
                str(config.refine_digits) + ' digits, polishing at ' +
                str(list(config.polish_stages)) + '..')
    candidates = []
    if config.workers > 1:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            work = [(bracket, config) for bracket in brackets]
            for results in pool.map(_process_remote, work):
                candidates.extend(_from_remote(data, steps)
                                  for data, steps in results)
    else:
        for bracket in brackets:
            candidates.extend(process_bracket(bracket, config, logger))

    solutions = dedupe(reject_degenerate(candidates, logger),
                       config.resolved_dedupe_tol())
    for candidate in solutions:
        logger.debug(' - theta=' +
                     candidate.kernel.ctx.nstr(candidate.theta, 15) +
                     ' branch=' + str(candidate.branch))
    if len(solutions) != EXPECTED_SOLUTIONS:
        logger.warning('found ' + str(len(solutions)) +
                       ' solutions, expected ' + str(EXPECTED_SOLUTIONS))
    logger.info('..found=' + str(len(solutions)) +
                ' expected=' + str(EXPECTED_SOLUTIONS))
    return solutions


def polish_reference_tables(tables, digits, max_iter=100, logger=LOGGER):
    """
    Newton from each published table

    @type tables: dict index -> {VertexLabel: (x, y) decimal strings}
    @rtype list of (index, EmbeddingCandidate)
    """
    logger.info('Polishing ' + str(len(tables)) + ' reference tables at ' +
                str(digits) + ' digits..')
    polished = []
    for index in sorted(tables):
        seed = candidate_from_coordinates(tables[index], digits)
        polished.append((index, newton_polish(seed, digits, max_iter,
                                              logger)))
    logger.info('..tables polished')
    return polished
