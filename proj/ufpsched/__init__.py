"""Path-cover and cost-scheduling approximation workbench.

Thin convenience layer over the compiled module: instances and results
cross the boundary as JSON; this wrapper decodes them to dicts.
"""

import json as _json

from _ufpsched import (  # noqa: F401
    generate_gsp,
    generate_ufp,
    oracle,
    roundtrip,
    run_experiment,
    solve,
)

__all__ = [
    "generate_ufp",
    "generate_gsp",
    "solve",
    "oracle",
    "roundtrip",
    "run_experiment",
    "solve_dict",
    "oracle_dict",
    "load",
]


def load(text):
    """Decode an instance JSON string to a dict."""
    return _json.loads(text)


def solve_dict(instance, solver, epsilon="1/2", cap=0):
    """Like solve(), but with the result decoded to a dict (None if infeasible)."""
    out = solve(instance, solver, epsilon, cap)
    result = _json.loads(out["result"]) if out["result"] else None
    return {"result": result, "infeasible": out["infeasible"], "cap_hit": out["cap_hit"]}


def oracle_dict(instance, cap=0):
    """Like oracle(), but with the result decoded to a dict (None if infeasible)."""
    out = oracle(instance, cap)
    result = _json.loads(out["result"]) if out["result"] else None
    return {"result": result, "infeasible": out["infeasible"], "cap_hit": out["cap_hit"]}
