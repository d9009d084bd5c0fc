"""Python interface to the frustration-graph free-fermion solver."""

import json as _json

try:
    from ._core import (  # type: ignore[attr-defined]
        NonScfError,
        SolverError,
        analyze_json,
        realize,
        run_cli,
        solve_json,
        verify_json,
    )
except ImportError:  # module built standalone in a CMake tree
    from _core import (  # type: ignore[no-redef]
        NonScfError,
        SolverError,
        analyze_json,
        realize,
        run_cli,
        solve_json,
        verify_json,
    )

__all__ = [
    "NonScfError",
    "SolverError",
    "analyze",
    "realize",
    "run_cli",
    "solve",
    "verify",
]


def analyze(model, **kwargs):
    """Graph facts for a model: frustration graph, claw-freeness,
    simplicial cliques, even holes, closures, token sliding, line-graph
    root."""
    return _json.loads(analyze_json(model, **kwargs))


def solve(model, **kwargs):
    """Symmetry sectors, single-particle energies and the full spectrum."""
    return _json.loads(solve_json(model, **kwargs))


def verify(model, **kwargs):
    """Solve plus exact-diagonalization cross-checks and the operator
    identity suite."""
    return _json.loads(verify_json(model, **kwargs))
