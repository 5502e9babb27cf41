"""Copy counts of disconnected graphs, gluings and their expansion coefficients."""

from fractions import Fraction

from . import _core
from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401


def classify(g1, g2, q, n):
    """Predicted law of N(g1 + g2) mod q in G(n, p) as (law, [Fraction])."""
    law, masses = _core.classify_pair_distribution(g1, g2, q, n)
    return law, [Fraction(a, b) for a, b in masses]


def run_experiment(components, n, p, q, samples, seed, jobs=1, predict="auto"):
    """Experiment report as a dict (same schema as the CLI's JSON output)."""
    import json

    return json.loads(
        _core.run_experiment_json(components, n, p, q, samples, seed, jobs, predict)
    )
