"""Maximum G-free vertex subsets: exact solvers, bounds and campaigns."""

from ._core import (
    CapExceeded,
    Graph,
    InvariantViolation,
    ParseError,
    bound_names,
    bounds,
    forest_number,
    free_chromatic_number,
    from_graph6,
    gnp,
    graph,
    independence_number,
    quick_exact,
    solve,
    verify,
)

__all__ = [
    "CapExceeded",
    "Graph",
    "InvariantViolation",
    "ParseError",
    "bound_names",
    "bounds",
    "forest_number",
    "free_chromatic_number",
    "from_graph6",
    "gnp",
    "graph",
    "independence_number",
    "quick_exact",
    "solve",
    "verify",
]
