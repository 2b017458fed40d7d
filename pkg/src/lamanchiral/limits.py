"""Resource guards for the exhaustive / exponential algorithms.

Everything in this package is exact, which means runtimes blow up
combinatorially rather than losing precision.  The guards below keep the
exhaustive routines (subgraph sweeps, cut-set enumeration, truncated
series) inside the regime where they finish in seconds.  Set the
environment variable ``LAMANCHIRAL_MAX_VERTICES`` to raise (or lower)
the vertex guards when you know what you are doing.
"""

from __future__ import annotations

import os

# Exhaustive induced-subgraph sweeps are O(2^n).
SUBGRAPH_SWEEP_MAX_VERTICES = 12
# Weight-state construction: term counts grow exponentially in moves.
STATE_MAX_VERTICES = 10
# Cut-set enumeration is O(2^m) in the edge count.
CUT_ENUM_MAX_EDGES = 12
# Truncated exponential series order.
MAX_TRUNCATION_ORDER = 6

_ENV = "LAMANCHIRAL_MAX_VERTICES"


def max_vertices(default: int) -> int:
    """Vertex guard, honouring the ``LAMANCHIRAL_MAX_VERTICES`` override."""
    raw = os.environ.get(_ENV)
    if raw is None:
        return default
    try:
        value = int(raw)
    except ValueError:
        return default
    return value if value > 0 else default
