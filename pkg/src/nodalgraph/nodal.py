"""Sign patterns of eigenfunctions and their weak and strong nodal domains.

A weak domain is a maximal connected vertex set on which the function never
takes both strict signs; a strong domain is a maximal connected set on which
the function is strictly of one sign. Zero vertices may be shared by two weak
domains of opposite sign and belong to no strong domain.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Sequence

import numpy as np

from .errors import AllZero, DimensionMismatch, TooLarge
from .graph_core import WeightedGraph
from .unionfind import DisjointSet

Kind = Literal["weak", "strong"]
DEFAULT_TAU = 1e-8
BRUTE_FORCE_LIMIT = 20


@dataclass(frozen=True)
class SignVector:
    signs: tuple[int, ...]
    tau: float

    @property
    def n(self) -> int:
        return len(self.signs)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(x for x, s in enumerate(self.signs) if s != 0)

    @classmethod
    def from_signs(cls, signs: Sequence[int], tau: float = 0.0) -> SignVector:
        signs = tuple(int(s) for s in signs)
        if any(s not in (-1, 0, 1) for s in signs):
            raise ValueError("signs must be -1, 0 or +1")
        if not any(signs):
            raise AllZero("sign vector has empty support")
        return cls(signs=signs, tau=tau)


def classify_signs(f, tau: float = DEFAULT_TAU) -> SignVector:
    """Sign of each entry, with ``|f(x)| <= tau * max|f|`` counted as zero."""
    if not 0 <= tau < 1:
        raise ValueError(f"tau must lie in [0, 1), got {tau!r}")
    f = np.asarray(f, dtype=float)
    if not np.all(np.isfinite(f)):
        raise ValueError("vector has non-finite entries")
    top = float(np.max(np.abs(f))) if f.size else 0.0
    if top == 0.0:
        raise AllZero("vector is identically zero")
    cut = tau * top
    signs = tuple(0 if abs(x) <= cut else (1 if x > 0 else -1) for x in f)
    return SignVector(signs=signs, tau=tau)


@dataclass(frozen=True)
class NodalDomain:
    vertices: frozenset[int]
    sign: int
    kind: Kind

    def sorted_vertices(self) -> list[int]:
        return sorted(self.vertices)


@dataclass(frozen=True)
class NodalPartition:
    kind: Kind
    domains: tuple[NodalDomain, ...]
    signs: SignVector

    @property
    def count(self) -> int:
        return len(self.domains)

    def __len__(self) -> int:
        return len(self.domains)

    def vertex_sets(self) -> set[frozenset[int]]:
        return {d.vertices for d in self.domains}


def _sort_key(d: NodalDomain):
    return (-d.sign, min(d.vertices))


def _partition(kind: Kind, domains, s: SignVector) -> NodalPartition:
    return NodalPartition(kind=kind, domains=tuple(sorted(domains, key=_sort_key)), signs=s)


def _check_sizes(g: WeightedGraph, s: SignVector) -> None:
    if s.n != g.n:
        raise DimensionMismatch(f"sign vector has {s.n} entries, graph has {g.n} vertices")


def _components(g: WeightedGraph, keep) -> list[list[int]]:
    """Connected components of the subgraph induced on vertices with ``keep(x)``."""
    ds = DisjointSet(g.n)
    for u, v, _ in g.edges:
        if keep(u) and keep(v):
            ds.union(u, v)
    return ds.groups(x for x in range(g.n) if keep(x))


def strong_domains(g: WeightedGraph, s: SignVector) -> NodalPartition:
    _check_sizes(g, s)
    domains = []
    for sign in (1, -1):
        for comp in _components(g, lambda x: s.signs[x] == sign):
            domains.append(NodalDomain(frozenset(comp), sign, "strong"))
    return _partition("strong", domains, s)


def weak_domains(g: WeightedGraph, s: SignVector) -> NodalPartition:
    _check_sizes(g, s)
    domains = []
    for sign in (1, -1):
        for comp in _components(g, lambda x: s.signs[x] * sign >= 0):
            if any(s.signs[x] == sign for x in comp):
                domains.append(NodalDomain(frozenset(comp), sign, "weak"))
    return _partition("weak", domains, s)


def nodal_domains(g: WeightedGraph, s: SignVector, kind: Kind) -> NodalPartition:
    if kind == "weak":
        return weak_domains(g, s)
    if kind == "strong":
        return strong_domains(g, s)
    raise ValueError(f"unknown kind {kind!r}")


def brute_force_domains(g: WeightedGraph, s: SignVector, kind: Kind) -> NodalPartition:
    """Literal maximal-subset enumeration over all 2^n vertex sets.

    Exponential; meant as a test oracle for :func:`weak_domains` and
    :func:`strong_domains`.
    """
    _check_sizes(g, s)
    if g.n > BRUTE_FORCE_LIMIT:
        raise TooLarge(f"brute force limited to n <= {BRUTE_FORCE_LIMIT}, got n={g.n}")
    if kind not in ("weak", "strong"):
        raise ValueError(f"unknown kind {kind!r}")
    n = g.n
    pos = sum(1 << x for x in range(n) if s.signs[x] > 0)
    neg = sum(1 << x for x in range(n) if s.signs[x] < 0)
    zero = ((1 << n) - 1) & ~(pos | neg)
    nbr = [sum(1 << y for y in g.neighbors[x]) for x in range(n)]

    def connected(mask: int) -> bool:
        start = mask & -mask
        seen = start
        frontier = start
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            fresh = nbr[low.bit_length() - 1] & mask & ~seen
            seen |= fresh
            frontier |= fresh
        return seen == mask

    def compatible(mask: int) -> bool:
        if mask & pos and mask & neg:
            return False
        if kind == "strong" and mask & zero:
            return False
        return True

    valid = [m for m in range(1, 1 << n) if compatible(m) and connected(m)]
    valid.sort(key=lambda m: -bin(m).count("1"))
    maximal: list[int] = []
    for m in valid:
        if not any(m & big == m for big in maximal):
            maximal.append(m)

    domains = []
    for m in maximal:
        verts = frozenset(x for x in range(n) if m >> x & 1)
        sign = 1 if m & pos else -1
        domains.append(NodalDomain(verts, sign, kind))
    return _partition(kind, domains, s)


@dataclass(frozen=True)
class DomainAdjacency:
    """``pairs`` holds ordered index pairs ``(i, j)`` with D_i adjacent to D_j.

    ``pos_neg_edges`` lists edges as ``(x, y)`` with ``x`` strictly positive and
    ``y`` strictly negative.
    """

    pairs: tuple[tuple[int, int], ...]
    pos_neg_edges: tuple[tuple[int, int], ...]

    def adjacent(self, i: int, j: int) -> bool:
        return (i, j) in self.pairs


def domain_adjacency(g: WeightedGraph, p: NodalPartition) -> DomainAdjacency:
    """D_i is adjacent to D_j when some x in D_i has a neighbour y in D_j \\ D_i."""
    pairs = set()
    for i, di in enumerate(p.domains):
        for j, dj in enumerate(p.domains):
            if i == j:
                continue
            outside = dj.vertices - di.vertices
            if any(y in outside for x in di.vertices for y in g.neighbors[x]):
                pairs.add((i, j))
    signs = p.signs.signs
    pos_neg = []
    for u, v, _ in g.edges:
        if signs[u] * signs[v] < 0:
            pos_neg.append((u, v) if signs[u] > 0 else (v, u))
    return DomainAdjacency(pairs=tuple(sorted(pairs)), pos_neg_edges=tuple(sorted(pos_neg)))
