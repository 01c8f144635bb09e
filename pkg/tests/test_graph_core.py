import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nodalgraph.errors import (
    DimensionMismatch,
    Disconnected,
    DuplicateEdge,
    EmptyGraph,
    NonPositiveWeight,
    SelfLoop,
    VertexOutOfRange,
)
from nodalgraph.gallery import tree7_pair
from nodalgraph.generators import generate_graph
from nodalgraph.graph_core import apply_operator, assemble_operator, quadratic_form, validate_graph

from conftest import path_graph, star_graph


def test_smallest_graph():
    g = validate_graph(2, [(0, 1, 1.0)])
    assert g.n == 2 and g.edges == ((0, 1, 1.0),) and g.potential == (0.0, 0.0)


def test_tree7_is_valid(tree7):
    assert tree7.n == 7 and tree7.num_edges == 6


def test_edges_are_canonicalized():
    g = validate_graph(3, [(2, 1, 0.5), (1, 0)])
    assert g.edges == ((0, 1, 1.0), (1, 2, 0.5))
    assert g.weight(2, 1) == 0.5 and g.weight(0, 2) == 0.0


@pytest.mark.parametrize(
    "n, edges, potential, error",
    [
        (3, [(0, 1)], None, Disconnected),
        (0, [], None, EmptyGraph),
        (2, [(0, 0)], None, SelfLoop),
        (2, [(0, 1), (1, 0)], None, DuplicateEdge),
        (2, [(0, 2)], None, VertexOutOfRange),
        (2, [(0, -1)], None, VertexOutOfRange),
        (2, [(0, 1, 0.0)], None, NonPositiveWeight),
        (2, [(0, 1, -1.0)], None, NonPositiveWeight),
        (2, [(0, 1, float("nan"))], None, NonPositiveWeight),
        (2, [(0, 1)], [1.0], DimensionMismatch),
    ],
)
def test_validation_errors(n, edges, potential, error):
    with pytest.raises(error):
        validate_graph(n, edges, potential)


def test_single_vertex_is_connected():
    g = validate_graph(1, [], [0.5])
    assert np.array_equal(assemble_operator(g), [[0.5]])


def test_assemble_p2():
    assert np.array_equal(assemble_operator(path_graph(2)), [[1, -1], [-1, 1]])


def test_assemble_star():
    A = np.zeros((5, 5))
    A[0, 1:] = A[1:, 0] = 1
    assert np.array_equal(assemble_operator(star_graph(5)), np.diag([4, 1, 1, 1, 1]) - A)


def test_assemble_potential_on_diagonal():
    assert np.array_equal(assemble_operator(path_graph(2, [1, 2])), [[2, -1], [-1, 3]])


def test_apply_p2():
    g = path_graph(2)
    assert np.array_equal(apply_operator(g, [1, 1]), [0, 0])
    assert np.array_equal(apply_operator(g, [1, -1]), [2, -2])


def test_apply_tree7_eq14():
    pair = tree7_pair()
    f = pair.float_vector()
    lam = (3 + np.sqrt(5)) / 2
    assert np.allclose(apply_operator(pair.graph, f), lam * f, rtol=0, atol=1e-12)


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        apply_operator(path_graph(3), [1, 2])
    with pytest.raises(DimensionMismatch):
        quadratic_form(path_graph(3), [1, 2])


def test_quadratic_form_examples():
    assert quadratic_form(path_graph(4), np.zeros(4)) == 0.0
    assert quadratic_form(path_graph(2), [1, -1]) == 4.0


def _random_graph(seed):
    rng = np.random.default_rng(seed)
    kind = ["path", "cycle", "star", "random_tree", "erdos_renyi"][seed % 5]
    n = int(rng.integers(3, 13))
    return generate_graph(kind, n, "random", "random", seed)


def test_quadratic_form_matches_apply_n8():
    g = generate_graph("erdos_renyi", 8, "random", "random", 3)
    f = np.random.default_rng(0).standard_normal(8)
    qf = quadratic_form(g, f)
    assert abs(qf - apply_operator(g, f) @ f) <= 1e-10 * abs(qf)


@settings(max_examples=60, deadline=None)
@given(seed=st.integers(0, 10_000), data=st.data())
def test_evaluation_paths_agree(seed, data):
    g = _random_graph(seed)
    f = np.array(data.draw(st.lists(st.floats(-10, 10), min_size=g.n, max_size=g.n)))
    h = np.array(data.draw(st.lists(st.floats(-10, 10), min_size=g.n, max_size=g.n)))
    a, b = data.draw(st.floats(-5, 5)), data.draw(st.floats(-5, 5))
    H = assemble_operator(g)
    assert np.array_equal(H, H.T)
    Hf = apply_operator(g, f)
    assert np.allclose(Hf, H @ f, rtol=1e-12, atol=1e-12 * (1 + np.abs(H).sum()))
    qf = quadratic_form(g, f)
    assert abs(qf - Hf @ f) <= 1e-10 * (1 + abs(qf) + np.abs(H).sum() * (f @ f))
    lhs = apply_operator(g, a * f + b * h)
    rhs = a * Hf + b * apply_operator(g, h)
    assert np.allclose(lhs, rhs, rtol=1e-12, atol=1e-12 * (1 + np.abs(rhs).max()))


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 10_000), c=st.floats(-3, 3), data=st.data())
def test_laplacian_form_nonnegative_and_vanishes_on_constants(seed, c, data):
    kind = ["path", "cycle", "star", "random_tree", "erdos_renyi"][seed % 5]
    g = generate_graph(kind, 3 + seed % 9, "random", "zero", seed)
    f = np.array(data.draw(st.lists(st.floats(-10, 10), min_size=g.n, max_size=g.n)))
    assert quadratic_form(g, f) >= 0
    assert quadratic_form(g, np.full(g.n, c)) == 0.0
    assert np.allclose(apply_operator(g, np.ones(g.n)), 0.0, atol=1e-12)
    if np.ptp(f) > 1e-3:
        assert quadratic_form(g, f) > 0
