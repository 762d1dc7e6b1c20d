"""Python interface to the hypembed C++ core."""

import json as _json

from ._core import (
    HypembedError,
    Space,
    closed_neighborhood,
    delta_hyperbolicity,
    fit_qi,
    generate,
    gromov_product,
    hyperbolic_distance,
    neighborhood,
    space_from_json,
    visual_metric_circle,
)
from . import _core

__all__ = [
    "HypembedError",
    "Space",
    "capacity_profile",
    "closed_neighborhood",
    "delta_hyperbolicity",
    "fit_qi",
    "generate",
    "gromov_product",
    "hyperbolic_distance",
    "neighborhood",
    "run_pipeline",
    "space_from_json",
    "visual_metric_circle",
]


def run_pipeline(config):
    """Run the pipeline; `config` uses the same keys as the CLI config file."""
    return _json.loads(_core.run_pipeline(_json.dumps(config)))


def capacity_profile(space, m_values, taus, delta, budget=8):
    return _json.loads(_core.capacity_profile(space, list(m_values), list(taus), delta, budget))
