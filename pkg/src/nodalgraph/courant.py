"""Checks of the discrete nodal domain bounds and of the identities behind them.

For an eigenfunction ``f`` of ``lambda_k`` with ``lo = k_lower`` and
``hi = k_upper`` (the first and last index sharing ``lambda_k``):

* the number of weak domains is at most ``lo``,
* the number of strong domains is at most ``hi``,
* for ``k >= 2`` the weak count is at most ``2 (k - 1)``,
* if ``lambda_2`` is simple then ``f_2`` has exactly two weak domains.

The proof builds a test function ``g = sum_i alpha_i g_i`` from the
restrictions ``g_i`` of ``f`` to its ``m`` domains, orthogonal to
``f_1..f_{m-1}``. Then ``<Hg, g> = lambda_k + Rem`` with ``Rem <= 0`` while
``<Hg, g> >= lambda_m``. These functions evaluate every piece numerically.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DegenerateSystem, ResidualTooLarge
from .graph_core import WeightedGraph, apply_operator, assemble_operator
from .nodal import DEFAULT_TAU, NodalPartition, classify_signs, strong_domains, weak_domains
from .spectra import (
    DEFAULT_TAU_GROUP,
    EigenGroups,
    PerronReport,
    Spectrum,
    eigendecompose,
    group_eigenvalues,
    perron_check,
    random_unit_vector,
    sample_eigenfunction,
)
from .generators import make_rng

EIGEN_RESIDUAL_RTOL = 1e-8
IDENTITY_RTOL = 1e-8
REMAINDER_ATOL = 1e-10
ORTHOGONALITY_TOL = 1e-9
DEFAULT_SAMPLES = 5


@dataclass(frozen=True, eq=False)
class DomainWeights:
    """One coefficient per domain, and the induced map alpha(x) on vertices."""

    alpha: np.ndarray
    vertex_alpha: np.ndarray


@dataclass(frozen=True, eq=False)
class TestFunction:
    g: np.ndarray
    blocks: np.ndarray  # row i is g_i: f_k on the support of D_i, zero elsewhere

    __test__ = False  # keep pytest from collecting this class

    @property
    def m(self) -> int:
        return self.blocks.shape[0]


def domain_blocks(partition: NodalPartition, f_k) -> np.ndarray:
    f_k = np.asarray(f_k, dtype=float)
    signs = partition.signs.signs
    blocks = np.zeros((partition.count, len(f_k)))
    for i, d in enumerate(partition.domains):
        for x in d.vertices:
            if signs[x] != 0:
                blocks[i, x] = f_k[x]
    return blocks


def build_test_function(
    partition: NodalPartition, spectrum: Spectrum, f_k
) -> tuple[TestFunction, DomainWeights]:
    """Combine the domain restrictions into a unit vector orthogonal to f_1..f_{m-1}.

    The coefficients are the smallest right-singular direction of the
    ``(m-1) x m`` system ``<g_i, f_j> = 0``, solved on unit-normalized blocks
    so that a unit coefficient vector gives a unit ``g`` directly.
    """
    m = partition.count
    if m < 2:
        raise ValueError(f"need at least two domains, got {m}")
    blocks = domain_blocks(partition, f_k)
    norms = np.linalg.norm(blocks, axis=1)
    if np.any(norms == 0.0):
        raise DegenerateSystem("a domain has no support vertex")
    unit_blocks = blocks / norms[:, None]
    M = spectrum.eigenvectors[:, : m - 1].T @ unit_blocks.T
    beta = np.linalg.svd(M, full_matrices=True)[2][-1]
    top = np.abs(beta).max()
    lead = int(np.flatnonzero(np.abs(beta) >= top * (1 - 1e-12))[0])
    if beta[lead] < 0:
        beta = -beta
    beta = beta / np.linalg.norm(beta)
    alpha = beta / norms
    g = beta @ unit_blocks
    vertex_alpha = np.zeros(len(g))
    for i, d in enumerate(partition.domains):
        for x in d.vertices:
            if partition.signs.signs[x] != 0:
                vertex_alpha[x] = alpha[i]
    return TestFunction(g=g, blocks=blocks), DomainWeights(alpha=alpha, vertex_alpha=vertex_alpha)


def remainder(g: WeightedGraph, f_k, weights: DomainWeights) -> float:
    """Rem = 1/2 sum_{x,y} b(x,y) (alpha(x) - alpha(y))^2 f(x) f(y)."""
    f = np.asarray(f_k, dtype=float)
    a = weights.vertex_alpha
    u, v = g.tails, g.heads
    return float(np.sum(g.weights * (a[u] - a[v]) ** 2 * f[u] * f[v]))


@dataclass(frozen=True)
class SandwichDiagnostics:
    kind: str
    m: int
    lambda_k: float
    lambda_m: float
    rayleigh: float
    remainder: float
    identity_error: float
    variational_slack: float
    orthogonality: float
    norm_error: float
    tolerance: float

    @property
    def remainder_ok(self) -> bool:
        return self.remainder <= REMAINDER_ATOL

    @property
    def identity_ok(self) -> bool:
        return self.identity_error <= self.tolerance

    @property
    def variational_ok(self) -> bool:
        return self.variational_slack >= -self.tolerance

    @property
    def orthogonality_ok(self) -> bool:
        return self.orthogonality <= ORTHOGONALITY_TOL

    @property
    def passed(self) -> bool:
        return (
            self.remainder_ok
            and self.identity_ok
            and self.variational_ok
            and self.orthogonality_ok
            and self.norm_error <= 1e-12
        )


def rayleigh_sandwich(
    g: WeightedGraph, spectrum: Spectrum, k: int, tf: TestFunction, rem: float, kind: str = "weak"
) -> SandwichDiagnostics:
    """Check lambda_m <= <Hg, g> = lambda_k + Rem for a unit test function."""
    m = tf.m
    lam_k = spectrum.eigenvalue(k)
    lam_m = spectrum.eigenvalue(m)
    norm_sq = float(tf.g @ tf.g)
    rq = float(apply_operator(g, tf.g) @ tf.g)
    ortho = float(np.max(np.abs(spectrum.eigenvectors[:, : m - 1].T @ tf.g))) if m > 1 else 0.0
    return SandwichDiagnostics(
        kind=kind,
        m=m,
        lambda_k=lam_k,
        lambda_m=lam_m,
        rayleigh=rq,
        remainder=rem,
        identity_error=abs(rq - lam_k * norm_sq - rem),
        variational_slack=rq - lam_m,
        orthogonality=ortho,
        norm_error=abs(norm_sq - 1.0),
        tolerance=IDENTITY_RTOL * spectrum.scale,
    )


def proof_diagnostics(
    g: WeightedGraph, spectrum: Spectrum, k: int, f, partition: NodalPartition
) -> SandwichDiagnostics | None:
    """Test function, remainder and sandwich for one partition; ``None`` if it has one domain."""
    if partition.count < 2:
        return None
    tf, weights = build_test_function(partition, spectrum, f)
    rem = remainder(g, f, weights)
    return rayleigh_sandwich(g, spectrum, k, tf, rem, kind=partition.kind)


@dataclass(frozen=True, eq=False)
class CaseRecord:
    """Outcome for one (k, sample) pair. ``sample`` 0 is the basis eigenvector."""

    k: int
    sample: int
    eigenvalue: float
    lo: int
    hi: int
    weak_count: int
    strong_count: int
    residual: float
    weak_ok: bool
    strong_ok: bool
    powers_ok: bool | None
    fiedler_ok: bool | None
    f: np.ndarray = field(repr=False)
    weak: NodalPartition = field(repr=False)
    strong: NodalPartition = field(repr=False)
    diagnostics: dict[str, SandwichDiagnostics | None] = field(default_factory=dict, repr=False)

    @property
    def bounds_ok(self) -> bool:
        return self.weak_ok and self.strong_ok and self.powers_ok is not False and self.fiedler_ok is not False

    @property
    def diagnostics_ok(self) -> bool:
        return all(d is None or d.passed for d in self.diagnostics.values())

    @property
    def passed(self) -> bool:
        return self.bounds_ok and self.diagnostics_ok


def verify_eigenfunction(
    g: WeightedGraph,
    s: Spectrum,
    groups: EigenGroups,
    k: int,
    f,
    tau: float = DEFAULT_TAU,
    sample: int = 0,
    diagnostics: bool = True,
) -> CaseRecord:
    """Count the domains of ``f`` and test them against the bounds for index ``k``."""
    f = np.asarray(f, dtype=float)
    lam = s.eigenvalue(k)
    if abs(np.linalg.norm(f) - 1.0) > 1e-10:
        raise ValueError("eigenfunction must have unit norm")
    res = s.residual(f, lam)
    if res > EIGEN_RESIDUAL_RTOL * s.scale:
        raise ResidualTooLarge(f"||Hf - lambda_{k} f|| = {res:.3g} exceeds {EIGEN_RESIDUAL_RTOL * s.scale:.3g}")
    lo, hi = groups.cluster_of(k)
    signs = classify_signs(f, tau)
    weak = weak_domains(g, signs)
    strong = strong_domains(g, signs)
    powers = weak.count <= 2 * (k - 1) if k >= 2 else None
    fiedler = weak.count == 2 if (k == 2 and lo == hi == 2) else None
    diag = {}
    if diagnostics:
        diag = {"weak": proof_diagnostics(g, s, k, f, weak), "strong": proof_diagnostics(g, s, k, f, strong)}
    return CaseRecord(
        k=k,
        sample=sample,
        eigenvalue=lam,
        lo=lo,
        hi=hi,
        weak_count=weak.count,
        strong_count=strong.count,
        residual=res,
        weak_ok=weak.count <= lo,
        strong_ok=strong.count <= hi,
        powers_ok=powers,
        fiedler_ok=fiedler,
        f=f,
        weak=weak,
        strong=strong,
        diagnostics=diag,
    )


@dataclass(frozen=True, eq=False)
class SpectrumChecks:
    residual_bound: float
    orthonormality_error: float
    trace_error: float
    reconstruction_error: float
    scale: float

    @property
    def passed(self) -> bool:
        return (
            self.residual_bound <= 1e-10 * self.scale
            and self.orthonormality_error <= 1e-10
            and self.trace_error <= 1e-9
            and self.reconstruction_error <= 1e-9 * self.scale
        )


def spectrum_checks(s: Spectrum) -> SpectrumChecks:
    return SpectrumChecks(
        residual_bound=s.residual_bound,
        orthonormality_error=s.orthonormality_error,
        trace_error=s.trace_error(),
        reconstruction_error=s.reconstruction_error(),
        scale=s.scale,
    )


@dataclass(frozen=True, eq=False)
class VerificationReport:
    graph: WeightedGraph
    spectrum: Spectrum
    groups: EigenGroups
    records: tuple[CaseRecord, ...]
    perron: PerronReport
    checks: SpectrumChecks
    samples: int
    seed: int
    tau: float
    tau_group: float

    @property
    def violations(self) -> list[CaseRecord]:
        return [r for r in self.records if not r.bounds_ok]

    @property
    def passed(self) -> bool:
        return self.perron.passed and self.checks.passed and all(r.passed for r in self.records)


def verify_graph(
    g: WeightedGraph,
    samples_per_cluster: int = DEFAULT_SAMPLES,
    seed: int = 0,
    tau: float = DEFAULT_TAU,
    tau_group: float = DEFAULT_TAU_GROUP,
    diagnostics: bool = True,
) -> VerificationReport:
    """Check every basis eigenvector, plus random samples from each degenerate cluster.

    Samples from cluster ``lo..hi`` are recorded under ``k = lo`` with sample
    ids ``1..samples_per_cluster``; coefficients come from a PCG64 stream
    seeded with ``seed`` and consumed cluster by cluster in ascending order.
    """
    s = eigendecompose(assemble_operator(g))
    groups = group_eigenvalues(s, tau_group)
    rng = make_rng(seed)
    records = []
    for k in range(1, g.n + 1):
        records.append(verify_eigenfunction(g, s, groups, k, s.eigenvector(k), tau, 0, diagnostics))
    for lo, hi in groups.clusters:
        if hi == lo:
            continue
        for j in range(1, samples_per_cluster + 1):
            f = sample_eigenfunction(s, groups, lo, random_unit_vector(rng, hi - lo + 1))
            records.append(verify_eigenfunction(g, s, groups, lo, f, tau, j, diagnostics))
    records.sort(key=lambda r: (r.k, r.sample))
    return VerificationReport(
        graph=g,
        spectrum=s,
        groups=groups,
        records=tuple(records),
        perron=perron_check(s, groups),
        checks=spectrum_checks(s),
        samples=samples_per_cluster,
        seed=seed,
        tau=tau,
        tau_group=tau_group,
    )

