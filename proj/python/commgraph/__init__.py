"""Subgroup lattices and p-local commensurability graphs of finite groups.

Specs may be passed as JSON text or as plain dicts, e.g. {"sym": 4}.
"""

import json

from . import _core
from ._core import (
    CommgraphError,
    LatticeCapExceeded,
    OrderCapExceeded,
    SpecSyntaxError,
    suite_names,
)

__all__ = [
    "CommgraphError",
    "LatticeCapExceeded",
    "OrderCapExceeded",
    "SpecSyntaxError",
    "analyze",
    "dot",
    "graph",
    "group_info",
    "subgroups",
    "suite_names",
    "verify",
]


def _spec(spec):
    return spec if isinstance(spec, str) else json.dumps(spec)


def group_info(spec, order_cap=_core.DEFAULT_ORDER_CAP):
    return json.loads(_core.group_info(_spec(spec), order_cap))


def subgroups(spec, order_cap=_core.DEFAULT_ORDER_CAP, lattice_cap=_core.DEFAULT_LATTICE_CAP):
    return json.loads(_core.subgroups(_spec(spec), order_cap, lattice_cap))


def graph(spec, p, kind="comm", order_cap=_core.DEFAULT_ORDER_CAP):
    return json.loads(_core.graph(_spec(spec), p, kind, order_cap))


def analyze(spec, p, kind="comm", order_cap=_core.DEFAULT_ORDER_CAP):
    return json.loads(_core.analyze(_spec(spec), p, kind, order_cap))


def dot(spec, p, kind="comm", order_cap=_core.DEFAULT_ORDER_CAP):
    return _core.dot(_spec(spec), p, kind, order_cap)


def verify(suite="all", trials=1000, seed=7):
    return json.loads(_core.verify(suite, trials, seed))
