'''
config.py: Holds the solver settings and their YAML loading
'''

import os
from dataclasses import dataclass, fields, replace

import yaml

from heawood_ude.exceptions import ConfigurationError

DATA_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'data')
DEFAULTS_FILE = os.path.join(DATA_DIR, 'solve_defaults.yaml')


def load_yaml(path):
    try:
        with open(path, 'r') as stream:
            return yaml.safe_load(stream) or {}
    except OSError as exc:
        raise ConfigurationError("cannot read '" + path + "': " + str(exc))
    except yaml.YAMLError as exc:
        raise ConfigurationError("invalid YAML in '" + path + "': " +
                                 str(exc))


@dataclass(frozen=True)
class SolveConfig:
    """
    @type grid_points: int, theta samples per branch vector
    @type precision_stages: digits; bisection runs at the first stage,
          Newton polishing at each later one (or at the only one)
    @type dedupe_tol: float or None, see resolved_dedupe_tol
    @type newton_max_iter: int
    @type theta_range: (lo, hi) in radians, None for [0, 2 pi)
    @type workers: int, processes refining and polishing brackets
    """
    grid_points: int = 20000
    precision_stages: tuple = (30, 60)
    dedupe_tol: float = None
    newton_max_iter: int = 100
    theta_range: tuple = None
    workers: int = 1

    def __post_init__(self):
        object.__setattr__(self, 'precision_stages',
                           tuple(int(p) for p in self.precision_stages))
        if self.theta_range is not None:
            object.__setattr__(self, 'theta_range',
                               tuple(float(t) for t in self.theta_range))
        if self.dedupe_tol is not None:
            object.__setattr__(self, 'dedupe_tol', float(self.dedupe_tol))
        self.validate()

    def validate(self):
        if self.grid_points < 1000:
            raise ConfigurationError(
                "grid_points must be at least 1000, got " +
                str(self.grid_points))
        stages = self.precision_stages
        if not stages:
            raise ConfigurationError("precision_stages must not be empty")
        if any(b <= a for a, b in zip(stages, stages[1:])):
            raise ConfigurationError(
                "precision_stages must be strictly increasing: " +
                str(list(stages)))
        if stages[0] < 10:
            raise ConfigurationError("precision below 10 digits")
        if self.newton_max_iter < 1:
            raise ConfigurationError("newton_max_iter must be positive")
        if self.workers < 1:
            raise ConfigurationError("workers must be positive")
        if self.dedupe_tol is not None and self.dedupe_tol <= 0:
            raise ConfigurationError("dedupe_tol must be positive")
        if self.theta_range is not None:
            lo, hi = self.theta_range
            if not 0 <= lo < hi <= 6.283185307179587:
                raise ConfigurationError(
                    "theta_range must lie inside [0, 2 pi]: " +
                    str(self.theta_range))

    @property
    def refine_digits(self):
        return self.precision_stages[0]

    @property
    def final_digits(self):
        return self.precision_stages[-1]

    @property
    def polish_stages(self):
        return self.precision_stages[1:] or self.precision_stages

    def resolved_dedupe_tol(self):
        if self.dedupe_tol is not None:
            return self.dedupe_tol
        return 10.0 ** -min(20, self.final_digits // 2)

    def overlay(self, **settings):
        """ Copy with the settings that are not None replaced """
        settings = {k: v for k, v in settings.items() if v is not None}
        return replace(self, **settings)

    @staticmethod
    def from_yaml(path=None):
        """
        Defaults from the packaged solve_defaults.yaml, overlaid by the
        user's file when given
        """
        settings = load_yaml(DEFAULTS_FILE)
        if path is not None:
            settings.update(load_yaml(path))
        unknown = sorted(set(settings) - {f.name for f in fields(SolveConfig)})
        if unknown:
            raise ConfigurationError("unknown settings: " +
                                     ", ".join(unknown))
        return SolveConfig(**settings)
