"""Exact Satake-image computations for untwisted simply-laced affine root systems.

Thin wrappers over the C++ core; every call returns the CLI's canonical JSON
document as a Python dict, with the process exit code under "exit".
"""

import json as _json

from affsat._core import __version__  # noqa: F401
from affsat import _core


def _load(payload):
    return _json.loads(payload)


def satake(type, lam, depth=4, vmin=0, vmax=8, shells=30, q="sym", seed=12345):
    """S(h_lambda) by both routes. `lam` is a dict {"c":..,"finite":[..],"d":..}."""
    return _load(_core.satake(type, _json.dumps(lam), depth, vmin, vmax, shells, str(q), seed))


def jfun(type, lam, word, depth=6):
    """J_w(lambda) by the recursion and operator routes; `word` is a list of generators."""
    return _load(_core.jfun(type, _json.dumps(lam), _json.dumps(word), depth))


def identities(type, suite="all", depth=4, vmax=8, shells=20, seed=12345):
    return _load(_core.identities(type, suite, depth, vmax, shells, seed))


def enumerate_objects(type, what, bound=4, x=None):
    x_json = _json.dumps(x) if x is not None else ""
    return _load(_core.enumerate(type, what, bound, x_json))


def theta(type, mu=None, samples=5, seed=12345):
    mu_json = _json.dumps(mu) if mu is not None else ""
    return _load(_core.theta(type, mu_json, samples, seed))


def corpus_check(directory):
    return _load(_core.corpus_check(str(directory)))
