"""Exact mod-p cohomology checks for monomial subgroups of PU(p) x PU(p)."""

import json

from ._core import (
    ChernError,
    GroupError,
    SymbolicClass,
    SymbolicError,
    SymbolicRing,
    VerifyError,
    __version__,
    bar_betti,
    betti,
    check_groups,
    group_orders,
    q0,
    q1,
    reduce_mod_M,
)
from . import _core


def verify(p=3, only=(), long_mode=False, runtimes=True):
    """Run the verification suite and return the report as a dict."""
    return json.loads(_core.verify_json(p, list(only), long_mode, runtimes))


def cyclic(p):
    return json.loads(_core.cyclic_json(p))


def characters(p=3):
    return json.loads(_core.characters_json(p))


__all__ = [
    "ChernError",
    "GroupError",
    "SymbolicClass",
    "SymbolicError",
    "SymbolicRing",
    "VerifyError",
    "__version__",
    "bar_betti",
    "betti",
    "characters",
    "check_groups",
    "cyclic",
    "group_orders",
    "q0",
    "q1",
    "reduce_mod_M",
    "verify",
]
