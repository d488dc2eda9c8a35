"""Finite abelian groups presented as direct sums of cyclic factors.

Elements are residue vectors with componentwise modular arithmetic.  The
canonical presentation is the invariant-factor chain d_1 | d_2 | ... | d_k,
which is unique per isomorphism class and therefore usable as a dictionary
key.  Element enumeration is always in lexicographic residue order, so the
zero element has index 0 and every "least such element" tie-break downstream
is reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import gcd, lcm, prod


class GroupError(ValueError):
    """Bad group construction or operation arguments."""


class MismatchedGroups(GroupError):
    """Elements of different groups were combined."""


class InfeasibleDecomposition(GroupError):
    """A nonzero-summand decomposition does not exist (Z2 corner cases)."""


def _factorint(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _partitions(k: int) -> list[tuple[int, ...]]:
    """All integer partitions of k as non-increasing tuples."""
    if k == 0:
        return [()]
    out = []

    def rec(remaining, cap, acc):
        if remaining == 0:
            out.append(tuple(acc))
            return
        for part in range(min(cap, remaining), 0, -1):
            acc.append(part)
            rec(remaining - part, part, acc)
            acc.pop()

    rec(k, k, [])
    return out


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True, order=True)
class GroupSpec:
    """A finite abelian group Z_{n_1} + ... + Z_{n_k}, every n_i >= 2."""

    factors: tuple[int, ...]

    def __post_init__(self):
        if not self.factors:
            raise GroupError("a group needs at least one cyclic factor")
        if any(f < 2 for f in self.factors):
            raise GroupError(f"cyclic factors must be >= 2, got {self.factors}")

    @property
    def order(self) -> int:
        return prod(self.factors)

    @property
    def rank(self) -> int:
        return len(self.factors)

    @property
    def is_canonical(self) -> bool:
        return all(
            self.factors[i + 1] % self.factors[i] == 0
            for i in range(len(self.factors) - 1)
        )

    def canonical(self) -> "GroupSpec":
        """Invariant-factor form d_1 | d_2 | ... | d_k."""
        primary: dict[int, list[int]] = {}
        for f in self.factors:
            for p, e in _factorint(f).items():
                primary.setdefault(p, []).append(e)
        width = max(len(v) for v in primary.values())
        invariant = []
        for i in range(width):
            d = 1
            for p, exps in primary.items():
                exps_sorted = sorted(exps, reverse=True)
                if i < len(exps_sorted):
                    d *= p ** exps_sorted[i]
            invariant.append(d)
        invariant.reverse()  # ascending divisibility chain
        return GroupSpec(tuple(invariant))

    def isomorphic_to(self, other: "GroupSpec") -> bool:
        return self.canonical().factors == other.canonical().factors

    def exponent(self) -> int:
        return lcm(*self.factors)

    def zero(self) -> "GroupElement":
        return GroupElement(self, (0,) * len(self.factors))

    def element(self, residues) -> "GroupElement":
        if isinstance(residues, int):
            residues = (residues,)
        residues = tuple(int(r) for r in residues)
        if len(residues) != len(self.factors):
            raise GroupError(
                f"residue vector length {len(residues)} != rank {len(self.factors)}"
            )
        return GroupElement(
            self, tuple(r % f for r, f in zip(residues, self.factors))
        )

    def elements(self) -> tuple["GroupElement", ...]:
        return _elements_of(self)

    def nonzero_elements(self) -> tuple["GroupElement", ...]:
        return _elements_of(self)[1:]

    def index_of(self, a: "GroupElement") -> int:
        """Lexicographic index of an element (zero element is 0)."""
        if a.spec != self:
            raise MismatchedGroups("element belongs to a different group")
        idx = 0
        for r, f in zip(a.residues, self.factors):
            idx = idx * f + r
        return idx

    def element_at(self, idx: int) -> "GroupElement":
        residues = []
        for f in reversed(self.factors):
            idx, r = divmod(idx, f)
            residues.append(r)
        return GroupElement(self, tuple(reversed(residues)))

    def __str__(self) -> str:
        return "+".join(f"Z{f}" for f in self.factors)


@dataclass(frozen=True)
class GroupElement:
    """Residue vector in a GroupSpec; arithmetic is componentwise modular."""

    spec: GroupSpec
    residues: tuple[int, ...]

    def _check(self, other: "GroupElement") -> None:
        if self.spec != other.spec:
            raise MismatchedGroups(
                f"cannot combine elements of {self.spec} and {other.spec}"
            )

    def __add__(self, other: "GroupElement") -> "GroupElement":
        self._check(other)
        return GroupElement(
            self.spec,
            tuple(
                (a + b) % f
                for a, b, f in zip(self.residues, other.residues, self.spec.factors)
            ),
        )

    def __neg__(self) -> "GroupElement":
        return GroupElement(
            self.spec,
            tuple((-a) % f for a, f in zip(self.residues, self.spec.factors)),
        )

    def __sub__(self, other: "GroupElement") -> "GroupElement":
        return self + (-other)

    def __rmul__(self, k: int) -> "GroupElement":
        return GroupElement(
            self.spec,
            tuple((k * a) % f for a, f in zip(self.residues, self.spec.factors)),
        )

    def __mul__(self, k: int) -> "GroupElement":
        return self.__rmul__(k)

    def is_zero(self) -> bool:
        return all(r == 0 for r in self.residues)

    def order(self) -> int:
        return lcm(
            *(f // gcd(f, r) for r, f in zip(self.residues, self.spec.factors))
        )

    def __str__(self) -> str:
        if len(self.residues) == 1:
            return str(self.residues[0])
        return "(" + ",".join(str(r) for r in self.residues) + ")"


# operation aliases matching the verbs used throughout the workbench

def add(a: GroupElement, b: GroupElement) -> GroupElement:
    return a + b


def neg(a: GroupElement) -> GroupElement:
    return -a


def scalar_mul(k: int, a: GroupElement) -> GroupElement:
    return k * a


def element_order(a: GroupElement) -> int:
    return a.order()


def exponent(spec: GroupSpec) -> int:
    return spec.exponent()


@lru_cache(maxsize=None)
def _elements_of(spec: GroupSpec) -> tuple[GroupElement, ...]:
    return tuple(
        GroupElement(spec, res) for res in product(*(range(f) for f in spec.factors))
    )


def squares(spec: GroupSpec) -> frozenset[GroupElement]:
    """All nonzero g expressible as g = 2h."""
    return frozenset(2 * h for h in spec.elements() if not (2 * h).is_zero())


def involutions(spec: GroupSpec) -> frozenset[GroupElement]:
    """All nonzero h with 2h = 0; nonempty exactly for even group order."""
    return frozenset(
        h for h in spec.elements() if not h.is_zero() and (2 * h).is_zero()
    )


def cauchy_element(spec: GroupSpec, p: int) -> GroupElement:
    """Lexicographically least element of order exactly p (p prime, p | |A|)."""
    if not _is_prime(p):
        raise GroupError(f"{p} is not prime")
    if spec.order % p != 0:
        raise GroupError(f"{p} does not divide |A| = {spec.order}")
    for a in spec.elements():
        if a.order() == p:
            return a
    raise AssertionError("Cauchy's theorem violated; unreachable")


def decompose_sum(spec: GroupSpec, target: GroupElement, n: int) -> tuple[GroupElement, ...]:
    """n nonzero elements summing to target, greedily lex-least.

    For |A| >= 3 every (target, n >= 2) is feasible, and n = 1 needs a
    nonzero target.  Over Z2 the only nonzero element is 1, so feasibility
    reduces to the parity match target = n mod 2; the mismatched cases raise
    InfeasibleDecomposition rather than silently failing.
    """
    if target.spec != spec:
        raise MismatchedGroups("target belongs to a different group")
    if n < 1:
        raise GroupError(f"need n >= 1 summands, got {n}")
    if n == 1 and target.is_zero():
        raise GroupError("cannot write 0 as a single nonzero element")
    if spec.order == 2:
        one = spec.element((1,) * spec.rank)
        want = one if n % 2 == 1 else spec.zero()
        if want != target:
            raise InfeasibleDecomposition(
                f"over {spec} no {n} nonzero elements sum to {target}"
            )
        return (one,) * n

    nonzero = spec.nonzero_elements()
    parts: list[GroupElement] = []
    remaining = target
    for k in range(n, 0, -1):
        if k == 1:
            parts.append(remaining)
            break
        if k == 2:
            g1 = next(g for g in nonzero if g != remaining)
        else:
            g1 = nonzero[0]
        parts.append(g1)
        remaining = remaining - g1
    assert all(not g.is_zero() for g in parts)
    return tuple(parts)


@dataclass(frozen=True)
class GroupCatalog:
    """One canonical representative per isomorphism class up to max_order."""

    max_order: int
    groups: tuple[GroupSpec, ...]

    def __iter__(self):
        return iter(self.groups)

    def __len__(self):
        return len(self.groups)


def enumerate_abelian_groups(max_order: int) -> GroupCatalog:
    """Every abelian group of order in [2, max_order], invariant-factor form."""
    if max_order < 2:
        raise GroupError("max_order must be >= 2")
    groups: list[GroupSpec] = []
    for m in range(2, max_order + 1):
        primary = _factorint(m)
        partition_choices = [
            [(p, part) for part in _partitions(e)] for p, e in sorted(primary.items())
        ]
        for combo in product(*partition_choices):
            width = max(len(part) for _, part in combo)
            invariant = []
            for i in range(width):
                d = 1
                for p, part in combo:
                    if i < len(part):
                        d *= p ** part[i]
                invariant.append(d)
            invariant.reverse()
            groups.append(GroupSpec(tuple(invariant)))
    groups.sort(key=lambda s: (s.order, s.factors))
    return GroupCatalog(max_order, tuple(groups))


def automorphisms(spec: GroupSpec) -> list[dict[GroupElement, GroupElement]]:
    """All group automorphisms, as element maps.  Intended for |A| <= ~16."""
    elems = spec.elements()
    gens = []
    for i in range(spec.rank):
        res = [0] * spec.rank
        res[i] = 1
        gens.append(spec.element(tuple(res)))
    out = []
    # generator images must preserve order; bijectivity then certifies a hom
    candidates = [[a for a in elems if a.order() == g.order()] for g in gens]
    for images in product(*candidates):
        phi: dict[GroupElement, GroupElement] = {}
        for a in elems:
            image = spec.zero()
            for r, im in zip(a.residues, images):
                image = image + r * im
            phi[a] = image
        if len(set(phi.values())) == len(elems):
            out.append(phi)
    return out


# --- parsing and rendering -------------------------------------------------

_ALIASES = {"V4": (2, 2)}


def parse_group(text: str) -> GroupSpec:
    """Parse `Z4`, `Z2+Z4`, `V4` (case-insensitive) into a GroupSpec."""
    s = text.strip().upper().replace(" ", "")
    if not s:
        raise GroupError("empty group spec")
    if s in _ALIASES:
        return GroupSpec(_ALIASES[s])
    factors = []
    for part in s.split("+"):
        if part in _ALIASES:
            factors.extend(_ALIASES[part])
            continue
        if not part.startswith("Z") or not part[1:].isdigit():
            raise GroupError(f"cannot parse group factor {part!r} in {text!r}")
        factors.append(int(part[1:]))
    return GroupSpec(tuple(factors))


def canonical_name(spec: GroupSpec) -> str:
    return str(spec.canonical())


def parse_element(spec: GroupSpec, text: str) -> GroupElement:
    """Parse `3` or `(1,0)` as an element of spec."""
    s = text.strip()
    if s.startswith("(") and s.endswith(")"):
        body = s[1:-1].strip()
        parts = [p for p in body.split(",") if p.strip() != ""]
        return spec.element(tuple(int(p) for p in parts))
    if spec.rank != 1:
        raise GroupError(
            f"element of {spec} needs a {spec.rank}-tuple, got {text!r}"
        )
    return spec.element(int(s))


@lru_cache(maxsize=None)
def cayley_tables(spec: GroupSpec) -> tuple[int, tuple[int, ...], tuple[int, ...]]:
    """(order m, flat m*m addition table, negation table) over element indices."""
    elems = spec.elements()
    m = len(elems)
    index = {e: i for i, e in enumerate(elems)}
    add_flat = [0] * (m * m)
    for i, a in enumerate(elems):
        for j, b in enumerate(elems):
            add_flat[i * m + j] = index[a + b]
    neg_tab = [index[-a] for a in elems]
    return m, tuple(add_flat), tuple(neg_tab)
