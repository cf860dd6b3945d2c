"""Frames, sampling sets and Dirichlet expansions in weighted spaces of entire functions."""

import json as _json

from ._holoframe import *  # noqa: F401,F403
from ._holoframe import __version__, run_config


def run(config):
    """Run an experiment given a config dict or JSON string; returns the report dict."""
    if not isinstance(config, str):
        config = _json.dumps(config)
    return run_config(config)
