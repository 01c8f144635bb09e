"""Eigendecomposition, multiplicity grouping and eigenspace sampling."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import BadCoefficientLength, ConvergenceFailure, NonUnitCoefficients

DEFAULT_TAU_GROUP = 1e-7
RESIDUAL_RTOL = 1e-10
ORTHO_TOL = 1e-10


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Full spectrum of a symmetric operator.

    ``eigenvectors[:, i]`` pairs with ``eigenvalues[i]`` (0-based storage; the
    public index ``k`` used elsewhere is 1-based).
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    operator: np.ndarray
    residual_bound: float
    orthonormality_error: float

    @property
    def n(self) -> int:
        return len(self.eigenvalues)

    @property
    def frobenius_norm(self) -> float:
        return float(np.linalg.norm(self.operator, "fro"))

    @property
    def scale(self) -> float:
        """1 + ||H||_F, the reference magnitude for every tolerance."""
        return 1.0 + self.frobenius_norm

    def eigenvalue(self, k: int) -> float:
        return float(self.eigenvalues[k - 1])

    def eigenvector(self, k: int) -> np.ndarray:
        return self.eigenvectors[:, k - 1].copy()

    def residual(self, f, lam: float) -> float:
        f = np.asarray(f, dtype=float)
        return float(np.linalg.norm(self.operator @ f - lam * f))

    def trace_error(self) -> float:
        """|sum of eigenvalues - trace(H)| relative to 1 + |trace|."""
        tr = float(np.trace(self.operator))
        return abs(float(np.sum(self.eigenvalues)) - tr) / (1.0 + abs(tr))

    def reconstruction_error(self) -> float:
        F = self.eigenvectors
        return float(np.linalg.norm(self.operator - (F * self.eigenvalues) @ F.T, "fro"))


def _normalize_sign(v: np.ndarray) -> np.ndarray:
    mag = np.abs(v)
    top = mag.max()
    # exact ties only up to rounding; the lowest index wins
    idx = int(np.flatnonzero(mag >= top * (1 - 1e-12))[0])
    return -v if v[idx] < 0 else v


def jacobi_eigh(H: np.ndarray, max_sweeps: int = 100) -> tuple[np.ndarray, np.ndarray]:
    """Cyclic Jacobi rotations. Returns unsorted eigenvalues and eigenvectors."""
    A = np.array(H, dtype=float)
    n = A.shape[0]
    V = np.eye(n)
    scale = np.linalg.norm(A, "fro")
    if n == 1 or scale == 0.0:
        return np.diag(A).copy(), V
    for _ in range(max_sweeps):
        off = float(np.linalg.norm(A - np.diag(np.diag(A))))
        if off <= 1e-15 * scale:
            return np.diag(A).copy(), V
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                if abs(apq) <= 1e-300:
                    continue
                theta = (A[q, q] - A[p, p]) / (2.0 * apq)
                if abs(theta) > 1e150:
                    t = 1.0 / (2.0 * theta)
                else:
                    t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                cp, cq = A[:, p].copy(), A[:, q].copy()
                A[:, p] = c * cp - s * cq
                A[:, q] = s * cp + c * cq
                rp, rq = A[p, :].copy(), A[q, :].copy()
                A[p, :] = c * rp - s * rq
                A[q, :] = s * rp + c * rq
                A[p, q] = A[q, p] = 0.0
                vp, vq = V[:, p].copy(), V[:, q].copy()
                V[:, p] = c * vp - s * vq
                V[:, q] = s * vp + c * vq
    raise ConvergenceFailure(f"Jacobi iteration did not converge in {max_sweeps} sweeps")


def eigendecompose(H, method: str = "lapack", max_sweeps: int = 100) -> Spectrum:
    """Full symmetric eigendecomposition with a checked accuracy contract.

    ``method`` is ``"lapack"`` (numpy's ``eigh``) or ``"jacobi"``. Eigenvalues
    come back ascending; each eigenvector is flipped so its largest-magnitude
    entry is positive. Raises :class:`ConvergenceFailure` if the residual or
    orthonormality bound is missed.
    """
    H = np.asarray(H, dtype=float)
    if H.ndim != 2 or H.shape[0] != H.shape[1] or H.shape[0] < 1:
        raise ValueError(f"expected a non-empty square matrix, got shape {H.shape}")
    if method == "lapack":
        try:
            w, V = np.linalg.eigh(H)
        except np.linalg.LinAlgError as exc:
            raise ConvergenceFailure(str(exc)) from exc
    elif method == "jacobi":
        w, V = jacobi_eigh(H, max_sweeps=max_sweeps)
    else:
        raise ValueError(f"unknown method {method!r}")

    order = np.argsort(w, kind="stable")
    w = np.ascontiguousarray(w[order])
    V = np.ascontiguousarray(V[:, order])
    for i in range(V.shape[1]):
        V[:, i] = _normalize_sign(V[:, i])

    residual = float(np.max(np.linalg.norm(H @ V - V * w, axis=0)))
    ortho = float(np.max(np.abs(V.T @ V - np.eye(len(w)))))
    scale = 1.0 + float(np.linalg.norm(H, "fro"))
    if residual > RESIDUAL_RTOL * scale or ortho > ORTHO_TOL:
        raise ConvergenceFailure(
            f"eigendecomposition missed its contract: residual {residual:.3g}, orthonormality {ortho:.3g}"
        )
    w.setflags(write=False)
    V.setflags(write=False)
    return Spectrum(eigenvalues=w, eigenvectors=V, operator=H, residual_bound=residual, orthonormality_error=ortho)


@dataclass(frozen=True)
class EigenGroups:
    """Maximal runs of numerically equal eigenvalues.

    ``clusters`` lists ``(lo, hi)`` pairs, 1-based and inclusive.
    """

    clusters: tuple[tuple[int, int], ...]
    tau: float
    _owner: tuple[int, ...] = field(repr=False, compare=False, default=())

    def __post_init__(self) -> None:
        owner = []
        for c, (lo, hi) in enumerate(self.clusters):
            owner.extend([c] * (hi - lo + 1))
        object.__setattr__(self, "_owner", tuple(owner))

    def cluster_of(self, k: int) -> tuple[int, int]:
        if not 1 <= k <= len(self._owner):
            raise IndexError(f"index {k} outside 1..{len(self._owner)}")
        return self.clusters[self._owner[k - 1]]

    def lo(self, k: int) -> int:
        return self.cluster_of(k)[0]

    def hi(self, k: int) -> int:
        return self.cluster_of(k)[1]

    def is_simple(self, k: int) -> bool:
        lo, hi = self.cluster_of(k)
        return lo == hi


def group_eigenvalues(s: Spectrum, tau_group: float = DEFAULT_TAU_GROUP) -> EigenGroups:
    """Cluster adjacent eigenvalues whose gap is at most ``tau_group * (1 + max|lambda|)``."""
    if not tau_group > 0:
        raise ValueError("tau_group must be positive")
    w = s.eigenvalues
    threshold = tau_group * (1.0 + float(np.max(np.abs(w))))
    clusters = []
    lo = 1
    for i in range(1, len(w)):
        if w[i] - w[i - 1] > threshold:
            clusters.append((lo, i))
            lo = i + 1
    clusters.append((lo, len(w)))
    return EigenGroups(clusters=tuple(clusters), tau=tau_group)


def sample_eigenfunction(s: Spectrum, groups: EigenGroups, k: int, coeffs) -> np.ndarray:
    """Unit-norm combination of the basis eigenvectors spanning ``k``'s cluster."""
    lo, hi = groups.cluster_of(k)
    c = np.asarray(coeffs, dtype=float).ravel()
    if c.size != hi - lo + 1:
        raise BadCoefficientLength(f"cluster {lo}..{hi} has dimension {hi - lo + 1}, got {c.size} coefficients")
    if abs(np.linalg.norm(c) - 1.0) > 1e-12:
        raise NonUnitCoefficients(f"coefficient norm is {np.linalg.norm(c)!r}")
    f = s.eigenvectors[:, lo - 1 : hi] @ c
    return f / np.linalg.norm(f)


def random_unit_vector(rng: np.random.Generator, dim: int) -> np.ndarray:
    c = rng.standard_normal(dim)
    return c / np.linalg.norm(c)


@dataclass(frozen=True)
class PerronReport:
    passed: bool
    simple: bool
    gap: float
    min_entry: float
    nonpositive_vertices: tuple[int, ...]


def perron_check(s: Spectrum, groups: EigenGroups) -> PerronReport:
    """The ground state must be simple and, after sign normalization, strictly positive."""
    simple = groups.is_simple(1)
    f1 = s.eigenvectors[:, 0]
    bad = tuple(int(x) for x in np.flatnonzero(f1 <= 0))
    gap = float(s.eigenvalues[1] - s.eigenvalues[0]) if s.n > 1 else math.inf
    return PerronReport(
        passed=simple and not bad,
        simple=simple,
        gap=gap,
        min_entry=float(f1.min()),
        nonpositive_vertices=bad,
    )
