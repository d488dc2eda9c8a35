"""Vertex labelings over a finite abelian group and the magic-property check.

A labeling assigns every vertex a nonzero group element; its induced weight
at v is the sum of the labels over N(v).  A labeling is magic when all
weights coincide; the common value is the magic constant.  A zero label is
an *invalid labeling* (codomain violation), which is a different outcome
from a valid labeling that fails to be magic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .abelian import GroupElement, GroupSpec, parse_element
from .graphs import Graph, GraphError, classify_vertices


class InvalidLabelingError(ValueError):
    """Labeling violates its contract (zero label or dimension mismatch)."""


@dataclass(frozen=True)
class Labeling:
    group: GroupSpec
    values: tuple[GroupElement, ...]

    def __post_init__(self):
        for v, x in enumerate(self.values):
            if x.spec != self.group:
                raise InvalidLabelingError(f"label of vertex {v} is from {x.spec}")

    def __getitem__(self, v: int) -> GroupElement:
        return self.values[v]

    def render(self) -> str:
        return ",".join(f"v{i}={x}" for i, x in enumerate(self.values))


@dataclass(frozen=True)
class MagicCertificate:
    constant: GroupElement
    weights: tuple[GroupElement, ...]

    def render(self) -> str:
        return f"mu={self.constant}"


def weight(g: Graph, lab: Labeling, v: int) -> GroupElement:
    if len(lab.values) != g.n:
        raise GraphError(
            f"labeling has {len(lab.values)} values for a graph on {g.n} vertices"
        )
    total = lab.group.zero()
    for u in g.adj[v]:
        total = total + lab.values[u]
    return total


def verify_magic(g: Graph, lab: Labeling) -> MagicCertificate | None:
    """Certificate when all induced weights coincide, None otherwise."""
    if len(lab.values) != g.n:
        raise GraphError(
            f"labeling has {len(lab.values)} values for a graph on {g.n} vertices"
        )
    for v, x in enumerate(lab.values):
        if x.is_zero():
            raise InvalidLabelingError(f"vertex {v} carries the zero element")
    weights = tuple(weight(g, lab, v) for v in range(g.n))
    if any(w != weights[0] for w in weights):
        return None
    return MagicCertificate(weights[0], weights)


def check_support_forcing(g: Graph, cert: MagicCertificate, lab: Labeling) -> bool:
    """Every support vertex must carry the magic constant; exposed self-check."""
    supports = classify_vertices(g).supports
    return all(lab.values[v] == cert.constant for v in supports)


def _split_top_level(text: str) -> list[str]:
    """Split on commas outside parentheses, so `v0=(1,0)` stays whole."""
    chunks = []
    depth = 0
    cur = []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth = max(0, depth - 1)
        if ch == "," and depth == 0:
            chunks.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    chunks.append("".join(cur))
    return chunks


def parse_labeling(spec: GroupSpec, text: str, n: int) -> Labeling:
    """Parse the CLI literal `v0=1,v1=2,...` (all n vertices required)."""
    values: dict[int, GroupElement] = {}
    for chunk in _split_top_level(text):
        chunk = chunk.strip()
        if not chunk:
            continue
        if "=" not in chunk or not chunk.startswith("v"):
            raise InvalidLabelingError(f"bad labeling chunk {chunk!r}")
        key, _, val = chunk.partition("=")
        try:
            idx = int(key[1:])
        except ValueError as exc:
            raise InvalidLabelingError(f"bad vertex name {key!r}") from exc
        values[idx] = parse_element(spec, val)
    if sorted(values) != list(range(n)):
        raise InvalidLabelingError(
            f"labeling must cover v0..v{n - 1} exactly, got {sorted(values)}"
        )
    return Labeling(spec, tuple(values[i] for i in range(n)))


def apply_automorphism(
    lab: Labeling, phi: dict[GroupElement, GroupElement]
) -> Labeling:
    return Labeling(lab.group, tuple(phi[x] for x in lab.values))
