import numpy as np
import pytest
import sympy

from nodalgraph.errors import BadCoefficientLength, ConvergenceFailure, NonUnitCoefficients
from nodalgraph.generators import generate_graph
from nodalgraph.graph_core import assemble_operator
from nodalgraph.spectra import (
    eigendecompose,
    group_eigenvalues,
    jacobi_eigh,
    perron_check,
    random_unit_vector,
    sample_eigenfunction,
)

from conftest import cycle_graph, path_graph, star_graph, tree7_graph

SUITE = [
    generate_graph(kind, n, w, p, seed)
    for seed, (kind, n, w, p) in enumerate(
        [
            ("path", 2, "unit", "zero"),
            ("path", 9, "random", "random"),
            ("cycle", 6, "unit", "zero"),
            ("cycle", 11, "random", "random"),
            ("star", 7, "unit", "zero"),
            ("star", 10, "random", "random"),
            ("random_tree", 12, "random", "random"),
            ("erdos_renyi", 12, "random", "random"),
            ("erdos_renyi", 40, "random", "zero"),
        ]
    )
]


def spectrum_of(g, method="lapack"):
    return eigendecompose(assemble_operator(g), method=method)


def test_p2():
    assert np.allclose(spectrum_of(path_graph(2)).eigenvalues, [0, 2], atol=1e-14)


def test_c4():
    s = spectrum_of(cycle_graph(4))
    expected = sorted(2 - 2 * np.cos(2 * np.pi * j / 4) for j in range(4))
    assert np.allclose(s.eigenvalues, expected, atol=1e-12)
    assert np.allclose(s.eigenvalues, [0, 2, 2, 4], atol=1e-12)


def test_star5_charpoly_oracle():
    H = assemble_operator(star_graph(5))
    x = sympy.Symbol("x")
    poly = sympy.Matrix(H.astype(int).tolist()).charpoly(x).as_expr()
    assert sympy.expand(poly - x * (x - 1) ** 3 * (x - 5)) == 0
    assert np.trace(H) == 8
    assert np.allclose(spectrum_of(star_graph(5)).eigenvalues, [0, 1, 1, 1, 5], atol=1e-12)


@pytest.mark.parametrize("g", SUITE, ids=lambda g: f"n{g.n}m{g.num_edges}")
@pytest.mark.parametrize("method", ["lapack", "jacobi"])
def test_contract(g, method):
    s = spectrum_of(g, method)
    H = s.operator
    scale = 1 + np.linalg.norm(H, "fro")
    assert np.all(np.diff(s.eigenvalues) >= 0)
    assert s.residual_bound <= 1e-10 * scale
    assert np.max(np.abs(s.eigenvectors.T @ s.eigenvectors - np.eye(g.n))) <= 1e-10
    assert s.reconstruction_error() <= 1e-9 * scale
    assert s.trace_error() <= 1e-9
    for i in range(g.n):
        v = s.eigenvectors[:, i]
        mag = np.abs(v)
        lead = np.flatnonzero(mag >= mag.max() * (1 - 1e-12))[0]
        assert v[lead] > 0
    if g.has_zero_potential:
        assert abs(s.eigenvalues[0]) <= 1e-9
        f1 = s.eigenvectors[:, 0]
        assert np.ptp(f1) <= 1e-8


@pytest.mark.parametrize("g", SUITE, ids=lambda g: f"n{g.n}m{g.num_edges}")
def test_jacobi_agrees_with_lapack(g):
    a = spectrum_of(g, "lapack")
    b = spectrum_of(g, "jacobi")
    assert np.allclose(a.eigenvalues, b.eigenvalues, atol=1e-10 * a.scale)


def test_determinism():
    g = SUITE[7]
    a, b = spectrum_of(g), spectrum_of(g)
    assert a.eigenvalues.tobytes() == b.eigenvalues.tobytes()
    assert a.eigenvectors.tobytes() == b.eigenvectors.tobytes()


def test_jacobi_sweep_cap():
    H = assemble_operator(SUITE[7])
    with pytest.raises(ConvergenceFailure):
        jacobi_eigh(H, max_sweeps=1)


def test_rejects_bad_input():
    with pytest.raises(ValueError):
        eigendecompose(np.zeros((2, 3)))
    with pytest.raises(ValueError):
        eigendecompose(np.eye(2), method="qr")


def test_groups_star5():
    groups = group_eigenvalues(spectrum_of(star_graph(5)))
    assert groups.clusters == ((1, 1), (2, 4), (5, 5))
    assert groups.lo(3) == 2 and groups.hi(3) == 4


def test_groups_simple_spectrum():
    groups = group_eigenvalues(spectrum_of(path_graph(8)))
    assert groups.clusters == tuple((k, k) for k in range(1, 9))
    assert all(groups.lo(k) == groups.hi(k) == k for k in range(1, 9))


def test_groups_tree7():
    groups = group_eigenvalues(spectrum_of(tree7_graph()))
    assert groups.cluster_of(5) == (5, 6)
    assert groups.lo(5) == 5 and groups.hi(5) == 6


@pytest.mark.parametrize("g", SUITE, ids=lambda g: f"n{g.n}m{g.num_edges}")
def test_group_invariants(g):
    s = spectrum_of(g)
    groups = group_eigenvalues(s)
    w = s.eigenvalues
    thr = groups.tau * (1 + np.max(np.abs(w)))
    covered = []
    for i, (lo, hi) in enumerate(groups.clusters):
        covered.extend(range(lo, hi + 1))
        assert np.all(np.diff(w[lo - 1 : hi]) <= thr)
        if i:
            assert w[lo - 1] - w[lo - 2] > thr
    assert covered == list(range(1, g.n + 1))
    assert all(groups.lo(k) <= k <= groups.hi(k) for k in range(1, g.n + 1))


def test_sample_simple_is_basis_vector():
    s = spectrum_of(path_graph(5))
    groups = group_eigenvalues(s)
    assert np.allclose(sample_eigenfunction(s, groups, 3, [1.0]), s.eigenvector(3), atol=1e-15)


def test_sample_star_cluster():
    s = spectrum_of(star_graph(5))
    groups = group_eigenvalues(s)
    rng = np.random.default_rng(1)
    for _ in range(10):
        f = sample_eigenfunction(s, groups, 3, random_unit_vector(rng, 3))
        assert abs(np.linalg.norm(f) - 1) <= 1e-12
        assert s.residual(f, 1.0) <= 1e-8 * s.scale


def test_sample_unit_norm_random_graph():
    g = generate_graph("cycle", 10, "unit", "zero", 0)
    s = spectrum_of(g)
    groups = group_eigenvalues(s)
    rng = np.random.Generator(np.random.PCG64(5))
    for lo, hi in groups.clusters:
        f = sample_eigenfunction(s, groups, lo, random_unit_vector(rng, hi - lo + 1))
        assert abs(np.linalg.norm(f) - 1) <= 1e-12


def test_sample_errors():
    s = spectrum_of(star_graph(5))
    groups = group_eigenvalues(s)
    with pytest.raises(BadCoefficientLength):
        sample_eigenfunction(s, groups, 2, [1.0, 0.0])
    with pytest.raises(NonUnitCoefficients):
        sample_eigenfunction(s, groups, 2, [1.0, 1.0, 0.0])


def test_perron_p3():
    s = spectrum_of(path_graph(3))
    rep = perron_check(s, group_eigenvalues(s))
    assert rep.passed and rep.simple
    assert np.allclose(s.eigenvector(1), np.ones(3) / np.sqrt(3), atol=1e-12)


def test_perron_star5():
    s = spectrum_of(star_graph(5))
    assert perron_check(s, group_eigenvalues(s)).passed


@pytest.mark.parametrize("seed", range(25))
def test_perron_random(seed):
    kind = ["path", "cycle", "star", "random_tree", "erdos_renyi"][seed % 5]
    g = generate_graph(kind, 3 + seed % 10, "random", "random", seed)
    s = spectrum_of(g)
    rep = perron_check(s, group_eigenvalues(s))
    assert rep.passed and rep.gap > 0 and rep.min_entry > 0
