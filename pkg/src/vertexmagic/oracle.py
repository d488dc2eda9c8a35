"""Unpruned enumeration oracle.

Deliberately independent of the pruned search: it walks the entire candidate
space (|A|-1)^n with vectorized table lookups and no propagation, so it can
serve as the ground truth the solver is validated against.  Desk-scale only.
"""

from __future__ import annotations

import numpy as np

from .abelian import GroupSpec, cayley_tables
from .graphs import Graph


class OracleBoundError(ValueError):
    """Candidate space too large for exhaustive enumeration."""


MAX_CANDIDATES = 4_000_000


def naive_count(g: Graph, spec: GroupSpec) -> int:
    """Number of magic labelings, by full enumeration of (|A|-1)^n candidates."""
    m, add_flat, _ = cayley_tables(spec)
    n = g.n
    total = (m - 1) ** n
    if total > MAX_CANDIDATES:
        raise OracleBoundError(
            f"(|A|-1)^n = {total} exceeds the enumeration bound {MAX_CANDIDATES}"
        )
    add = np.array(add_flat, dtype=np.int64).reshape(m, m)
    idx = np.arange(total, dtype=np.int64)
    labels = np.empty((n, total), dtype=np.int64)
    base = m - 1
    for v in range(n):
        labels[v] = idx // (base ** v) % base + 1
    weights = np.empty((n, total), dtype=np.int64)
    for v in range(n):
        acc = np.zeros(total, dtype=np.int64)
        for u in g.adj[v]:
            acc = add[acc, labels[u]]
        weights[v] = acc
    magic = np.ones(total, dtype=bool)
    for v in range(1, n):
        magic &= weights[v] == weights[0]
    return int(magic.sum())


def naive_exists(g: Graph, spec: GroupSpec) -> bool:
    return naive_count(g, spec) > 0
