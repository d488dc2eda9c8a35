"""Simple undirected connected graphs and the structural predicates used by
the labeling theorems: pendant/support classification, diameter, cycle rank,
generalized-sun detection, and the shared-neighborhood obstruction.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass


class GraphError(ValueError):
    """Bad graph construction or an operation outside its domain."""


@dataclass(frozen=True)
class Graph:
    """Immutable simple connected graph on vertices 0..n-1."""

    n: int
    edges: tuple[tuple[int, int], ...]
    adj: tuple[tuple[int, ...], ...]
    masks: tuple[int, ...]

    @staticmethod
    def from_edges(n: int, edges) -> "Graph":
        if n < 1:
            raise GraphError("graph needs at least one vertex")
        norm = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at {u}")
            norm.add((min(u, v), max(u, v)))
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in norm:
            adj[u].add(v)
            adj[v].add(u)
        g = Graph(
            n,
            tuple(sorted(norm)),
            tuple(tuple(sorted(s)) for s in adj),
            tuple(sum(1 << w for w in s) for s in adj),
        )
        if not g.is_connected():
            raise GraphError("graph must be connected")
        return g

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adj)

    @property
    def m(self) -> int:
        return len(self.edges)

    def is_connected(self) -> bool:
        seen = {0}
        todo = deque([0])
        while todo:
            u = todo.popleft()
            for w in self.adj[u]:
                if w not in seen:
                    seen.add(w)
                    todo.append(w)
        return len(seen) == self.n

    def bfs_distances(self, source: int) -> list[int]:
        dist = [-1] * self.n
        dist[source] = 0
        todo = deque([source])
        while todo:
            u = todo.popleft()
            for w in self.adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    todo.append(w)
        return dist

    def relabeled(self, perm: list[int]) -> "Graph":
        """Graph with vertex v renamed perm[v]."""
        return Graph.from_edges(self.n, [(perm[u], perm[v]) for u, v in self.edges])


@dataclass(frozen=True)
class StructuralProfile:
    pendants: frozenset[int]
    supports: frozenset[int]
    weak_supports: frozenset[int]
    strong_supports: frozenset[int]
    degrees: tuple[int, ...]
    diameter: int
    cycle_rank: int


def diameter(g: Graph) -> int:
    best = 0
    for v in range(g.n):
        dist = g.bfs_distances(v)
        if min(dist) < 0:
            raise GraphError("diameter undefined for disconnected graph")
        best = max(best, max(dist))
    return best


def cycle_rank(g: Graph) -> int:
    return g.m - g.n + 1


def classify_vertices(g: Graph) -> StructuralProfile:
    pendants = frozenset(v for v in range(g.n) if g.degree(v) == 1)
    pend_count = [0] * g.n
    for p in pendants:
        pend_count[g.adj[p][0]] += 1
    supports = frozenset(v for v in range(g.n) if pend_count[v] >= 1)
    weak = frozenset(v for v in supports if pend_count[v] == 1)
    strong = frozenset(v for v in supports if pend_count[v] >= 2)
    return StructuralProfile(
        pendants=pendants,
        supports=supports,
        weak_supports=weak,
        strong_supports=strong,
        degrees=g.degrees,
        diameter=diameter(g),
        cycle_rank=cycle_rank(g),
    )


def two_core(g: Graph) -> frozenset[int]:
    """Vertices left after iteratively stripping degree-1 vertices."""
    deg = list(g.degrees)
    alive = [True] * g.n
    todo = deque(v for v in range(g.n) if deg[v] <= 1)
    while todo:
        v = todo.popleft()
        if not alive[v] or deg[v] > 1:
            continue
        alive[v] = False
        for w in g.adj[v]:
            if alive[w]:
                deg[w] -= 1
                if deg[w] == 1:
                    todo.append(w)
    return frozenset(v for v in range(g.n) if alive[v])


def cycle_vertices(g: Graph) -> frozenset[int]:
    """The unique cycle of a unicyclic graph."""
    if cycle_rank(g) != 1:
        raise GraphError("cycle_vertices needs a unicyclic graph")
    return two_core(g)


def is_generalized_sun(g: Graph) -> bool:
    """Unicyclic, at least one off-cycle vertex, all off-cycle vertices pendant."""
    if cycle_rank(g) != 1:
        return False
    core = two_core(g)
    if len(core) == g.n:
        return False  # bare cycle: the definition requires k < n
    return all(g.degree(v) == 1 for v in range(g.n) if v not in core)


def lemma0_obstruction(g: Graph) -> tuple[int, int] | None:
    """Lex-least ordered pair (u, v) with |N(u) ∩ N(v)| = d(u) - 1 = d(v)."""
    sets = [set(a) for a in g.adj]
    for u in range(g.n):
        du = g.degree(u)
        for v in range(g.n):
            if u == v:
                continue
            if g.degree(v) == du - 1 and len(sets[u] & sets[v]) == du - 1:
                return (u, v)
    return None


def degrees_same_parity(g: Graph) -> bool:
    return len({d % 2 for d in g.degrees}) == 1


def to_dot(g: Graph, roles: dict[str, int] | None = None, name: str = "G") -> str:
    """Deterministic DOT export; vertices carry role names when available."""
    label = {}
    if roles:
        for role in sorted(roles):
            v = roles[role]
            label.setdefault(v, []).append(role)
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        if v in label:
            lines.append(f'  {v} [label="{"/".join(label[v])}"];')
        else:
            lines.append(f"  {v};")
    for u, v in g.edges:
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def read_graph_file(text: str) -> Graph:
    """Parse the workbench graph format: first line n, then `u v` per line."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise GraphError("empty graph file")
    try:
        n = int(lines[0])
    except ValueError as exc:
        raise GraphError(f"bad vertex count line {lines[0]!r}") from exc
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise GraphError(f"bad edge line {ln!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return Graph.from_edges(n, edges)
