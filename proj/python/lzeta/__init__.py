"""Python access to the lzeta commands.

Every function returns the decoded JSON report of the matching command-line
command. Points and central characters use the same text names as the CLI.
"""

import json

from ._lzeta import DEFAULT_SEED, LzetaError
from ._lzeta import dot as _dot
from ._lzeta import run as _run

__all__ = [
    "LzetaError",
    "orbits",
    "satake",
    "curve",
    "curve_dot",
    "lmap",
    "fibers",
    "llc",
    "verify",
    "export",
]


def _call(command, p, n=1, zeta=None, point=None, seed=DEFAULT_SEED):
    return json.loads(_run(command, p, n, zeta, point, seed))


def orbits(p, zeta=None):
    return _call("orbits", p, zeta=zeta)


def satake(p, n=1, zeta=None, point=None):
    return _call("satake", p, n, zeta, point)


def curve(p, n=1, zeta=None, point=None):
    return _call("curve", p, n, zeta, point)


def curve_dot(p, n=1, zeta=None):
    return _dot(p, n, zeta)


def lmap(p, n=1, zeta=None, point=None):
    return _call("map", p, n, zeta, point)


def fibers(p, n=1, zeta=None, point=None):
    return _call("fibers", p, n, zeta, point)


def llc(p, n=1, zeta=None, point=None):
    return _call("llc", p, n, zeta, point)


def verify(p, n=1, zeta=None, seed=DEFAULT_SEED):
    return _call("verify", p, n, zeta, seed=seed)


def export(p, n=1, zeta=None):
    return _call("export", p, n, zeta)
