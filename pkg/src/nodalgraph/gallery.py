"""Exact reproductions of two classical counterexamples.

* The star ``S_n`` has eigenvalue 1 with multiplicity ``n - 2``. An
  eigenvector vanishing at the centre with non-zero leaf values summing to
  zero has ``n - 1`` strong domains but only two weak ones.
* The 7-vertex spider with three legs of length two has the double
  eigenvalue ``(3 + sqrt 5)/2`` at indices 5 and 6. The eigenvector
  ``(2, -1-sqrt5, 0, (1+sqrt5)/2, (1+sqrt5)/2, -1, -1)`` has 5 weak and 6
  strong domains, yet edges still join strictly positive and strictly
  negative vertices.

Vertex order for the spider is top to bottom, left before right at equal
height: ``t=0`` (top leaf), ``m=1``, centre ``c=2``, ``l1=3``, ``r1=4``,
``l2=5``, ``r2=6``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .graph_core import WeightedGraph, assemble_operator, validate_graph
from .nodal import DomainAdjacency, SignVector, domain_adjacency, strong_domains, weak_domains
from .quadfield import QuadNumber
from .spectra import EigenGroups, Spectrum, eigendecompose, group_eigenvalues

INDEX_TOL = 1e-9
TREE7_EDGES = ((0, 1), (1, 2), (2, 3), (2, 4), (3, 5), (4, 6))
TREE7_LABELS = ("t", "m", "c", "l1", "r1", "l2", "r2")


@dataclass(frozen=True)
class ExactEigenpair:
    """A unit-weight graph with an exact eigenvalue/eigenvector pair.

    ``indices`` is the published 1-based index range ``(lo, hi)`` of ``lam``.
    """

    graph: WeightedGraph
    lam: QuadNumber
    f: tuple[QuadNumber, ...]
    indices: tuple[int, int]

    def signs(self) -> SignVector:
        return SignVector.from_signs([x.sign() for x in self.f], tau=0.0)

    def float_vector(self) -> np.ndarray:
        return np.array([float(x) for x in self.f])


@dataclass(frozen=True)
class Certificate:
    passed: bool
    residuals: tuple[QuadNumber, ...]

    @property
    def failing_vertices(self) -> tuple[int, ...]:
        return tuple(x for x, r in enumerate(self.residuals) if r)


def exact_apply(g: WeightedGraph, f) -> list[QuadNumber]:
    """H f in exact arithmetic. Weights and potentials are read as exact binary fractions."""
    weights = {(u, v): Fraction(w) for u, v, w in g.edges}
    out = []
    for x in range(g.n):
        acc = Fraction(g.potential[x]) * f[x]
        for y in g.neighbors[x]:
            acc = acc + weights[(min(x, y), max(x, y))] * (f[x] - f[y])
        out.append(acc)
    return out


def certify_exact(pair: ExactEigenpair) -> Certificate:
    """Evaluate ``(H f)(x) - lam f(x)`` exactly at every vertex."""
    hf = exact_apply(pair.graph, pair.f)
    residuals = tuple(QuadNumber() + (hx - pair.lam * fx) for hx, fx in zip(hf, pair.f))
    return Certificate(passed=not any(residuals), residuals=residuals)


@dataclass(frozen=True)
class GalleryResult:
    pair: ExactEigenpair
    certificate: Certificate
    weak_count: int
    strong_count: int
    adjacency: DomainAdjacency

    @property
    def pos_neg_edges(self) -> tuple[tuple[int, int], ...]:
        return self.adjacency.pos_neg_edges


def _analyse(pair: ExactEigenpair) -> GalleryResult:
    cert = certify_exact(pair)
    if not cert.passed:
        raise AssertionError(f"exact eigen-equation fails at vertices {cert.failing_vertices}")
    signs = pair.signs()
    weak = weak_domains(pair.graph, signs)
    strong = strong_domains(pair.graph, signs)
    return GalleryResult(
        pair=pair,
        certificate=cert,
        weak_count=weak.count,
        strong_count=strong.count,
        adjacency=domain_adjacency(pair.graph, strong),
    )


def star_leaf_values(leaves: int) -> list[int]:
    """Non-zero integers summing to zero: +1 on the first half (rounded up), -1 after, last leaf -2 if odd."""
    plus = (leaves + 1) // 2
    values = [1] * plus + [-1] * (leaves - plus)
    if leaves % 2:
        values[-1] = -2
    return values


def star_pair(n: int) -> ExactEigenpair:
    if n < 3:
        raise ValueError(f"star counterexample needs n >= 3, got {n}")
    g = validate_graph(n, [(0, i) for i in range(1, n)])
    f = (QuadNumber(0),) + tuple(QuadNumber(v) for v in star_leaf_values(n - 1))
    return ExactEigenpair(graph=g, lam=QuadNumber(1), f=f, indices=(2, n - 1))


def star_counterexample(n: int) -> GalleryResult:
    return _analyse(star_pair(n))


def tree7_pair() -> ExactEigenpair:
    g = validate_graph(7, TREE7_EDGES)
    r5 = QuadNumber.sqrt5()
    half_golden = (1 + r5) / 2
    f = (QuadNumber(2), -1 - r5, QuadNumber(0), half_golden, half_golden, QuadNumber(-1), QuadNumber(-1))
    return ExactEigenpair(graph=g, lam=(3 + r5) / 2, f=f, indices=(5, 6))


def tree7_counterexample() -> GalleryResult:
    return _analyse(tree7_pair())


@dataclass(frozen=True, eq=False)
class IndexVerdict:
    passed: bool
    expected: tuple[int, int]
    lo: int
    hi: int
    lam: float
    errors: tuple[float, ...]
    spectrum: Spectrum
    groups: EigenGroups


def index_check(pair: ExactEigenpair) -> IndexVerdict:
    """Check numerically that the exact eigenvalue sits exactly at the published indices."""
    s = eigendecompose(assemble_operator(pair.graph))
    groups = group_eigenvalues(s)
    lam = float(pair.lam)
    lo_e, hi_e = pair.indices
    errors = tuple(abs(s.eigenvalue(i) - lam) for i in range(lo_e, hi_e + 1))
    lo, hi = groups.cluster_of(lo_e)
    return IndexVerdict(
        passed=all(e <= INDEX_TOL for e in errors) and (lo, hi) == (lo_e, hi_e),
        expected=(lo_e, hi_e),
        lo=lo,
        hi=hi,
        lam=lam,
        errors=errors,
        spectrum=s,
        groups=groups,
    )
