'''
fixtures.py: Expensive shared test data, computed once per process
'''

import os
from functools import lru_cache

from heawood_ude.chain import candidate_from_coordinates
from heawood_ude.config import SolveConfig
from heawood_ude.solver import polish_reference_tables, solve_all
from heawood_ude.verify import load_reference_tables

INPUTS_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)),
                          'inputs')


def inputs_file(name):
    """ A local-<name> file, when present, takes the place of <name> """
    local = os.path.join(INPUTS_DIR, 'local-' + name)
    if os.path.isfile(local):
        return local
    return os.path.join(INPUTS_DIR, name)


@lru_cache(maxsize=None)
def reference_tables():
    return load_reference_tables()


def table_candidate(index, digits=30):
    """ A published table as it is, only lifted to `digits` """
    return candidate_from_coordinates(reference_tables()[index], digits)


@lru_cache(maxsize=None)
def polished_tables(digits):
    """ The eleven published tables after Newton at `digits`, in order """
    return tuple(candidate for _, candidate in
                 polish_reference_tables(reference_tables(), digits))


@lru_cache(maxsize=None)
def solved(grid_points=20000, precision_stages=(30, 60)):
    return tuple(solve_all(SolveConfig(grid_points=grid_points,
                                       precision_stages=precision_stages)))
